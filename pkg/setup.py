from setuptools import setup, find_packages
from polylb.polylb_version import polylb_version
from os import path, environ


def read_file(name):
    """Returns a file's contents"""
    with open(path.join(path.dirname(__file__), name), encoding="utf-8") as f:
        return f.read()


# If we're testing packaging, build using a ".devN" suffix in the version number,
# so that we can upload new files (as testpypi/pypi don't allow re-uploading files with
# the same name as previously uploaded).
# Numbering scheme: https://www.python.org/dev/peps/pep-0440
dev_build = ('.dev' + environ['DEV_BUILD']) if 'DEV_BUILD' in environ else ''

setup(
    name="polylb",
    version=polylb_version + dev_build,
    description="polylb: exact face counts of polytopes and executable checks of their lower bounds",
    keywords="polytope f-vector face lattice lower bound theorem combinatorics",
    long_description=read_file("README.md"),
    long_description_content_type="text/markdown",
    license="Apache License 2.0",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
    ],
    packages=find_packages(exclude=["test", "test.*", "benchmarks"]),
    install_requires=[
        "rich>=9.2.10",
        "cloudpickle>=1.5.0",
        "numpy",
        "networkx>=2.5",
    ],
    include_package_data=True,
    entry_points={"console_scripts": ["polylb = polylb.__main__:main"]},
    python_requires=">=3.8",
)
