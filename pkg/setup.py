from setuptools import setup

import re

with open("plancheck/__init__.py") as f:
    version = re.search(r'^__version__ = "(.+)"$', f.read(), re.M).group(1)

setup(
    name="PlanCheck",
    version=version,
    packages=["plancheck", "plancheck.monitors"],
    scripts=["scripts/plancheck.py"],
    entry_points={"console_scripts": ["plancheck = plancheck.cli:main"]},
    package_data={"plancheck": ["data/taxi/*"]},
    license="Apache License 2.0",
    author="PlanCheck developers",
    description="Validation and monitored execution of STRIPS plans written "
    "in a PDDL subset",
    install_requires=[
        "pyparsing>=3.0",
        "pandas",
    ],
    extras_require={
        "docs": [
            "sphinx",
        ],
        "tests": [
            "pytest>=3.9",
            "pytest-cov",
            "coveralls",
            "numpy",
        ],
    },
    tests_require=[
        "pytest>=3.9",
        "pytest-cov",
        "coveralls",
        "numpy",
    ],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3",
    ],
    python_requires=">=3.7",
    zip_safe=True,
)
