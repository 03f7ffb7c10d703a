"""Setup configuration for curvgauge."""

from setuptools import setup, find_packages

setup(
    name="curvgauge",
    version="0.1.0",
    description="Numerical verification of curvature inequalities for hypersurfaces",
    packages=find_packages(where=".", include=["src*"]),
    package_dir={"": "."},
    python_requires=">=3.10",
    install_requires=[
        "numpy>=1.26.2",
        "scipy>=1.11.4",
        "pandas>=2.1.4",
        "python-dotenv>=1.0.0",
        "pydantic>=2.5.0",
        "pydantic-settings>=2.1.0",
    ],
    entry_points={"console_scripts": ["curvgauge=src.verifier.cli:main"]},
)
