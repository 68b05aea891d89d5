"""
Report Export Utilities
Renders command results as JSON or text and writes them to disk
"""
import json
import logging
import os
from enum import Enum
from typing import Any

import numpy as np

logger = logging.getLogger(__name__)


class ReportExporter:
    """Serializes result payloads

    JSON output is written with sorted keys so that the same payload always
    renders to the same text and parses back to an equal object.
    """

    @staticmethod
    def to_json(payload: Any, indent: int = 2) -> str:
        return json.dumps(payload, indent=indent, sort_keys=True, default=ReportExporter._json_serializer)

    @staticmethod
    def to_json_line(payload: Any) -> str:
        return json.dumps(payload, sort_keys=True, default=ReportExporter._json_serializer)

    @staticmethod
    def save_json(output_path: str, payload: Any) -> bool:
        """Write a payload as a JSON document; returns False if the file could not be written"""
        return ReportExporter._write(output_path, ReportExporter.to_json(payload) + "\n")

    @staticmethod
    def save_jsonl(output_path: str, records: list) -> bool:
        lines = "".join(ReportExporter.to_json_line(record) + "\n" for record in records)
        return ReportExporter._write(output_path, lines)

    @staticmethod
    def save_text(output_path: str, text: str) -> bool:
        return ReportExporter._write(output_path, text if text.endswith("\n") else text + "\n")

    @staticmethod
    def _write(output_path: str, content: str) -> bool:
        try:
            directory = os.path.dirname(os.path.abspath(output_path))
            os.makedirs(directory, exist_ok=True)
            with open(output_path, 'w', encoding='utf-8') as f:
                f.write(content)
        except OSError as e:
            logger.error("Error writing %s: %s", output_path, e)
            return False
        logger.info("Report saved: %s", output_path)
        return True

    @staticmethod
    def _json_serializer(obj):
        """Fallback for values json does not handle natively"""
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, (set, frozenset)):
            return sorted(obj)
        if hasattr(obj, 'to_dict'):
            return obj.to_dict()
        raise TypeError(f"Object of type {type(obj)} is not JSON serializable")
