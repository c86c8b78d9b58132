#!/usr/bin/env python
import os

from setuptools import setup
from setuptools import find_packages

here = os.path.abspath(os.path.dirname(__file__))

version = {}
with open(os.path.join(here, "ldmflow", "__version__.py")) as f:
    exec(f.read(), version)

with open("README.rst") as readme_file:
    readme = readme_file.read()

setup(
    name="ldmflow",
    version=version["__version__"],
    description="Dynamic network loading, effective delays and departure-time equilibrium under the link delay model",
    long_description=readme + "\n\n",
    author="ldmflow developers",
    author_email="",
    packages=find_packages(exclude=["tests", "integration-tests"]),
    package_data={"ldmflow": ["data/*.yaml"]},
    include_package_data=True,
    license="Apache Software License 2.0",
    zip_safe=False,
    keywords=[
        "dynamic traffic assignment",
        "dynamic network loading",
        "link delay model",
        "dynamic user equilibrium"
    ],
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Education",
        "Intended Audience :: Science/Research",
        "Intended Audience :: Developers",
        "License :: OSI Approved :: Apache Software License",
        "Natural Language :: English",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.7"
    ],
    test_suite="tests",
    entry_points={
        "console_scripts": [
            "ldmflow=ldmflow.cli:main",
        ],
    },
    install_requires=[
        # see conda/environment.yml
    ],
    setup_requires=[
    ],
    tests_require=[
        # see conda/environment-dev.yml
    ],
    extras_require={
    }
)
