from setuptools import setup, find_packages

setup(
    name="hypergroup_amalgam",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    package_data={"hypergroup_amalgam": ["schemas/*.json", "data/*.hyp"]},
    install_requires=[
        "pydantic>=2.0",
        "numpy>=1.25",
        "pandas>=2.0",
        "scipy>=1.10",
        "python-dotenv>=1.0",
        "jsonschema>=4.18",
    ],
    extras_require={
        "test": ["pytest>=7.0", "hypothesis>=6.0"],
    },
    entry_points={
        "console_scripts": [
            "hypergroup-amalgam=hypergroup_amalgam.cli:main",
        ],
    },
    python_requires=">=3.9",
    description="Bessel-Kingman hypergroup numerics, amalgam norms and a theorem verification harness",
    author="Davis Kim",
)
