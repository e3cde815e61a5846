#RunConfig.py
from __future__ import annotations

import hashlib
import json
import math
import os
from pathlib import Path
from typing import List, Literal, Optional, Union

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

from hypergroup_amalgam.constants.constants import (
    ALPHA_MIN,
    DEFAULT_ALPHAS,
    DEFAULT_LAMBDA_CUT,
    DEFAULT_SEED,
)
from hypergroup_amalgam.models.ExponentPair import TailPolicy
from hypergroup_amalgam.models.QuadSpec import QuadSpec

ENV_OUTPUT_DIR = "HYPERGROUP_OUTPUT_DIR"
ENV_THREADS = "HYPERGROUP_THREADS"


class RunConfig(BaseModel):
    alpha_list: List[float] = Field(default_factory=lambda: list(DEFAULT_ALPHAS))
    quad: QuadSpec = Field(default_factory=QuadSpec)
    tail: TailPolicy = Field(default_factory=TailPolicy)
    lambda_cut: float = Field(DEFAULT_LAMBDA_CUT, gt=0.0)
    seed: int = Field(DEFAULT_SEED, ge=0, lt=2 ** 64)
    output_dir: Path = Path("reports")
    format: Literal["json", "csv"] = "json"
    threads: Optional[int] = Field(None, ge=1)
    recheck_refined: bool = False

    @field_validator("alpha_list")
    @classmethod
    def _check_alphas(cls, v: List[float]) -> List[float]:
        if not v:
            raise ValueError("alpha_list must not be empty")
        for a in v:
            if not math.isfinite(a) or a < ALPHA_MIN:
                raise ValueError(f"alpha {a} is below {ALPHA_MIN}")
        return v

    def digest(self) -> str:
        """sha256 of the numerical settings; output location and thread count excluded."""
        payload = self.model_dump(mode="json", exclude={"output_dir", "threads"})
        text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(text.encode("utf-8")).hexdigest()

    @classmethod
    def load(cls, path: Optional[Union[str, Path]] = None, **overrides) -> RunConfig:
        """
        Build a config from an optional JSON file, then the environment, then
        explicit overrides (None values are ignored).
        """
        load_dotenv()
        data = {}
        if path is not None:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        env_dir = os.getenv(ENV_OUTPUT_DIR)
        if env_dir:
            data["output_dir"] = env_dir
        env_threads = os.getenv(ENV_THREADS)
        if env_threads:
            data["threads"] = int(env_threads)
        data.update({k: v for k, v in overrides.items() if v is not None})
        return cls.model_validate(data)
