# Copyright 2024 The cnatlib authors.

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

#!/usr/bin/env python3
from setuptools import find_packages, setup


def get_version():
    with open("cnatlib/_version.py") as f:
        return f.readlines()[-1].split()[-1].strip("\"'")


info = {
    "name": "cnatlib",
    "version": get_version(),
    "maintainer": "The cnatlib authors",
    "license": "Apache License 2.0",
    "packages": find_packages(where="."),
    "package_data": {"cnatlib": ["fixtures/*.txt"]},
    "description": "Complete non-ambiguous trees and their matrices",
    "long_description": open("README.rst").read(),
    "provides": ["cnatlib"],
    "python_requires": ">=3.7",
    "install_requires": [
        "dask[delayed]",
        "numba>=0.49.1",
        "numpy>=1.15",
        "scipy>=1.2.1",
        "sympy>=1.5.1",
        "repoze.lru>=0.7",
    ],
    "entry_points": {"console_scripts": ["cnat = cnatlib.cli:main"]},
}

classifiers = [
    "Development Status :: 3 - Alpha",
    "Environment :: Console",
    "Intended Audience :: Science/Research",
    "License :: OSI Approved :: Apache Software License",
    "Natural Language :: English",
    "Operating System :: OS Independent",
    "Programming Language :: Python",
    "Programming Language :: Python :: 3",
    "Programming Language :: Python :: 3.7",
    "Programming Language :: Python :: 3.8",
    "Programming Language :: Python :: 3.9",
    "Programming Language :: Python :: 3.10",
    "Programming Language :: Python :: 3 :: Only",
    "Topic :: Scientific/Engineering :: Mathematics",
]

setup(classifiers=classifiers, **(info))
