from pathlib import Path
from typing import List

from setuptools import setup, find_packages

project_root = Path(__file__).parent

test_requires: List[str] = ["hypothesis>=6.14.0", "pytest>=6.2.4"]

install_requires: List[str] = [line.strip() for line in (project_root / "requirements.txt").read_text().splitlines()
                               if line.strip() and not line.startswith("#")
                               and line.strip() not in test_requires]

setup(name="strategical_languages", version="0.0.1", packages=find_packages(exclude=["Tests", "examples*"]),
      python_requires=">=3.8", install_requires=install_requires, extras_require={"test": test_requires}, )
