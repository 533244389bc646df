"""
Setup file

The code is licensed under the MIT license.
"""

from os import path
from setuptools import setup, find_packages

# Content of the README file
here = path.abspath(path.dirname(__file__))
with open(path.join(here, "README.md")) as f:
    long_description = f.read()

# Setup
setup(
    name="textpgm",
    version="0.1.0",
    description="Bayesian network, HMM and linear text classifiers with benchmark reports.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords=[
        "bayesian network",
        "structure learning",
        "hidden markov model",
        "text classification",
        "sentiment analysis",
    ],
    python_requires=">=3.8.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    include_package_data=True,
    install_requires=["pandas>=1.5", "numpy", "scipy", "scikit-learn>=1.2"],
    entry_points={"console_scripts": ["textpgm=textpgm.cli:main"]},
    license="MIT",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Artificial Intelligence",
        "Topic :: Scientific/Engineering :: Information Analysis",
        "Topic :: Text Processing :: Linguistic",
    ],
)
