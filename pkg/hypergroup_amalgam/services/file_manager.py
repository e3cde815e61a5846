import json
import os
import threading
from pathlib import Path
from typing import Iterable, Union

import pandas as pd

from hypergroup_amalgam.log.logger_singleton import getLogger
from hypergroup_amalgam.models.VerificationReport import VerificationReport

PathLike = Union[str, Path]


class FileManager:
    """
    Thread-safe writer for reports and grids under one output directory.

    Every file is written to a hidden temp file in the target directory,
    flushed and fsynced, then moved into place with os.replace, so concurrent
    jobs never leave a partial document behind.
    """

    def __init__(self, output_dir: PathLike):
        self.output_dir = Path(output_dir)
        self._lock = threading.Lock()
        self._temp_file_counter = 0
        self.logger = getLogger()
        self.output_dir.mkdir(parents=True, exist_ok=True)

    def write_text(self, name: str, text: str) -> Path:
        return self._write_temp_file_atomic(name, text)

    def write_json(self, name: str, payload) -> Path:
        return self._write_temp_file_atomic(name, json.dumps(payload, indent=2, sort_keys=True) + "\n")

    def write_report(self, report: VerificationReport) -> Path:
        """Validate against the versioned report schema, then write <stem>.json."""
        payload = report.validated_payload()
        return self._write_temp_file_atomic(f"{report.file_stem()}.json", json.dumps(payload, indent=2) + "\n")

    def write_reports(self, reports: Iterable[VerificationReport]) -> list:
        return [self.write_report(r) for r in reports]

    def write_csv(self, name: str, frame: pd.DataFrame) -> Path:
        # decimal point and \n regardless of locale/platform
        text = frame.to_csv(index=False, lineterminator="\n", float_format="%.17g")
        return self._write_temp_file_atomic(name, text)

    def _write_temp_file_atomic(self, name: str, text: str) -> Path:
        """
        1) Write to a .tmp file next to the target
        2) fsync the file
        3) os.replace to the final name (atomic)
        4) fsync the directory (best-effort)
        """
        with self._lock:
            self._temp_file_counter += 1
            index = self._temp_file_counter
        final_path = self.output_dir / name
        tmp_path = self.output_dir / f".{name}.{os.getpid()}.{index:06d}.tmp"

        try:
            with open(tmp_path, "w", encoding="utf-8", newline="\n") as f:
                f.write(text)
                f.flush()
                try:
                    os.fsync(f.fileno())
                except OSError:
                    self.logger.logMessage("[FileManager] fsync failed on temp file (non-fatal).")

            os.replace(str(tmp_path), str(final_path))

            try:
                dirfd = os.open(str(self.output_dir), os.O_DIRECTORY)
                try:
                    os.fsync(dirfd)
                finally:
                    os.close(dirfd)
            except (OSError, AttributeError):
                pass

            self.logger.logMessage(f"[FileManager] Wrote {final_path.name} ({final_path.stat().st_size / 1024:.1f} KB)")
            return final_path
        except Exception:
            try:
                if tmp_path.exists():
                    tmp_path.unlink()
            except OSError:
                pass
            raise
