from setuptools import setup, find_packages
from os import path

__version__ = "0.1.0"

here = path.abspath(path.dirname(__file__))

with open(path.join(here, "README.md"), encoding="utf-8") as f:
    long_description = f.read()

with open(path.join(here, "requirements.txt"), encoding="utf-8") as f:
    dependencies = [line.strip() for line in f if line.strip()]

setup(
    name="pylayerscatter",
    version=__version__,
    description="Forward synthesis and inversion of plane-wave scattering in layered media",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license="MIT",
    classifiers=[
      "Development Status :: 3 - Alpha",
      "Intended Audience :: Science/Research",
      "Programming Language :: Python :: 3.9",
      "Topic :: Scientific/Engineering :: Physics",
    ],
    packages=find_packages(exclude=["tests*"]),
    python_requires=">=3.9",
    install_requires=dependencies,
    extras_require={"tests": ["pytest", "hypothesis", "scipy"]},
    entry_points={"console_scripts": ["layerscatter=layerscatter.cli:run"]},
)
