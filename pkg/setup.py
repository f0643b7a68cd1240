"""
Copyright (c) dickemqs contributors.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

from setuptools import find_packages, setup

setup(
    name="dicke-mqs",
    version="0.1.0",
    description="Macroscopic quantum states of the Dicke model: variational "
    "energy branches, geometric phase and exact-diagonalization checks",
    packages=find_packages(exclude=["tests", "tests.*"]),
    include_package_data=True,
    install_requires=["numpy", "scipy", "matplotlib", "pyyaml", "tqdm"],
)
