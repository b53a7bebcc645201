"""Setup script for the jcm_trap module
"""
import setuptools

with open("README.md", "r") as fh:
    LONG_DESCRIPTION = fh.read()

setuptools.setup(
    name="jcm_trap",
    version="0.1.0",
    description="Dressed-state analysis of population trapping and revivals in the Jaynes-Cummings model",
    long_description=LONG_DESCRIPTION,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=("test", "test.*", "examples", "examples.*")),
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.20",
        "scipy>=1.6",
        "PyYAML>=5.1",
    ],
    entry_points={
        "console_scripts": [
            "jcm-trap=jcm_trap.cli:main",
        ],
    },
    classifiers=(
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Topic :: Scientific/Engineering :: Physics",
    ),
)
