#!/usr/bin/env python3

"""
Functions to import/export reports, cloud sidecars, and config schemas \
    from/to files on the local filesystem.
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import standard libraries
import json
import os
from pathlib import Path
from typing import Any

# Import third-party PyPI libraries
import pandas as pd
from pathvalidate import sanitize_filepath


# NOTE All functions below are in alphabetical order.


def extract_from_json(json_path: str | Path) -> dict:
    """
    :param json_path: str, a valid path to a real readable .json file
    :return: dict, the contents of the file at json_path
    """
    with open(json_path) as infile:
        return json.load(infile)


def make_parent_dir(file_path: str | Path) -> str:
    """ Create the directory that will hold `file_path` if it is missing.

    :param file_path: str | Path, output file path
    :return: str, `file_path` with characters invalid in paths removed
    """
    clean = str(sanitize_filepath(file_path, platform="auto"))
    parent = os.path.dirname(os.path.abspath(clean))
    os.makedirs(parent, exist_ok=True)
    return clean


def save_frame_csv(df: pd.DataFrame, csv_path: str | Path) -> str:
    """
    :param df: pd.DataFrame, e.g. a GeodesicArc or SampledCurve table
    :param csv_path: str, a valid path to save a .csv file at
    :return: str, the path the file was saved to
    """
    csv_path = make_parent_dir(csv_path)
    df.to_csv(csv_path, index=False, float_format="%.17g")
    return csv_path


def save_text(text: str, file_path: str | Path) -> str:
    """
    :param text: str, e.g. a pydantic model dumped as JSON
    :param file_path: str, a valid path to save a text file at
    :return: str, the path the file was saved to
    """
    file_path = make_parent_dir(file_path)
    with open(file_path, "w+") as outfile:
        outfile.write(text)
    return file_path


def save_to_json(contents: Any, json_path: str | Path) -> None:
    """
    :param json_path: str, a valid path to save a .json file at
    """
    with open(make_parent_dir(json_path), "w+") as outfile:
        json.dump(contents, outfile, indent=2, sort_keys=True)
