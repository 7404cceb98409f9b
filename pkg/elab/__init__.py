#!/usr/bin/env python3

"""
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import standard libraries
import os

# Constant: Absolute path to root directory of elab module
ROOT_DIR = os.path.dirname(os.path.dirname(__file__))

# Constant: Tool version embedded in every verification report
__version__ = "0.1.0"
