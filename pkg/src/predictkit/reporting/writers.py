"""
Delimited, markdown and manifest writers
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List

import numpy as np
import pandas as pd

from .tables import format_inf

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.6f"
MARKDOWN_FLOAT_FORMAT = ".4f"

SUFFIXES = {"csv": ".csv", "markdown": ".md"}


def _markdown_text(value: Any) -> str:
    """Render one cell for markdown; tokens such as Inf stay literal"""
    if pd.isna(value):
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, float):
        return format(value, MARKDOWN_FLOAT_FORMAT)
    return str(value)


class TableWriter:
    """Writes report tables into one output directory in every requested format"""

    def __init__(self, output_dir: Path, formats: Iterable[str] = ("csv",)):
        self.output_dir = Path(output_dir)
        self.formats = list(formats)
        self.files: List[Path] = []
        self.output_dir.mkdir(parents=True, exist_ok=True)

    def write(self, name: str, frame: pd.DataFrame) -> List[Path]:
        """Write one table under ``name`` with its format suffix"""
        frame = format_inf(frame)
        written = []
        for fmt in self.formats:
            path = self.output_dir / f"{name}{SUFFIXES[fmt]}"
            if fmt == "csv":
                frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, na_rep="")
            else:
                cells = frame
                if not frame.empty:
                    cells = frame.apply(lambda column: column.map(_markdown_text))
                text = cells.to_markdown(index=False, disable_numparse=True)
                path.write_text(f"{text}\n", encoding="utf-8")
            written.append(path)
            logger.debug(f"Wrote {len(frame)} rows to {path}")
        self.files.extend(written)
        return written

    def write_manifest(self, payload: Dict[str, Any]) -> Path:
        """Write manifest.json listing every file written so far"""
        path = self.output_dir / "manifest.json"
        payload = {**payload, "files": sorted(p.name for p in self.files)}
        path.write_text(
            json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n",
            encoding="utf-8",
        )
        self.files.append(path)
        logger.info(f"Manifest written to {path}")
        return path
