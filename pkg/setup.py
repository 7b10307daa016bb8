import os
import re
import pathlib

from setuptools import setup, find_packages


def get_long_description() -> str:
    """Converts relative repository links to absolute URLs
    if GITHUB_REPOSITORY and GITHUB_SHA environment variables exist.
    If not, it returns the raw content in README.md.
    """

    raw_readme = pathlib.Path("README.md").read_text()

    repository = os.environ.get("GITHUB_REPOSITORY")
    sha = os.environ.get("GITHUB_SHA")

    if repository is not None and sha is not None:
        full_url = f"https://github.com/{repository}/blob/{sha}/"
        return re.sub(r"]\((?!https)", "](" + full_url, raw_readme)
    return raw_readme


TESTS_REQUIRES = [
    "bandit",
    "black>=20.8b1",
    "mypy",
    "pylint",
    "pytest",
    "pytest-xdist",
    "types-pyyaml",
]

setup(
    name="recurrence-bounds",
    description="Denominator bounds for rational solutions of first order "
    "linear difference systems",
    long_description=get_long_description(),
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests"]),
    package_data={
        "recurrence_bounds": [
            "static/systems/*",
            "templates/*",
        ]
    },
    entry_points={
        "console_scripts": ["recbounds=recurrence_bounds.command_line:main"],
    },
    install_requires=[
        "jinja2>=2.10",
        "numpy>=1.17",
        "pandas>=1.0",
        "pyyaml>=5.1",
        "sympy>=1.6",
        "tqdm>=4.8",
    ],
    extras_require={
        "tests": TESTS_REQUIRES,
    },
    setup_requires=["setuptools_scm~=3.2"],
    python_requires="~=3.8",
    use_scm_version=True,
    zip_safe=False,
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
        "Natural Language :: English",
        "Environment :: Console",
        "Topic :: Scientific/Engineering",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
    ],
)
