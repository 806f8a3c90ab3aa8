# -*- coding: utf-8 -*-
"""
@file output.py
@brief Harness base exception and output file handling.
"""

import logging

logger = logging.getLogger(__name__)


class HarnessError(Exception):
    """Base exception for the experiment harness."""


class OutputPathError(HarnessError):
    """
    @brief Raised when an output file cannot be opened for writing.
    """

    def __init__(self, file_path: str, error: Exception):
        super().__init__(f"Cannot write output file {file_path}: {error}")
        self.file_path = file_path
        self.error = error


def open_output(file_path: str):
    """
    @brief Opens file_path for UTF-8 text writing with "\\n" line endings.
    @throws OutputPathError if the file cannot be created.
    """
    try:
        return open(file_path, "w", encoding="utf-8", newline="\n")
    except OSError as e:
        logger.error("Cannot open %s for writing: %s", file_path, e)
        raise OutputPathError(file_path, e)
