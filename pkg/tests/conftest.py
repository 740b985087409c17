# -*- coding: utf-8 -*-
"""
測試共用設定
"""

import json
from pathlib import Path

import numpy as np
import pytest

from awdo.models.network import NetworkShape
from awdo.services.mnist import synthetic_dataset


def pytest_addoption(parser):
    parser.addoption(
        "--mnist-dir",
        action="store",
        default=None,
        help="含 train-images-idx3-ubyte 與 train-labels-idx1-ubyte 的目錄",
    )


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def small_shape():
    return NetworkShape(input=16, hidden=5, output=4)


@pytest.fixture
def small_dataset(small_shape):
    return synthetic_dataset(24, small_shape, 0.8, np.random.default_rng(3))


@pytest.fixture
def mnist_paths(request):
    """MNIST 檔案路徑；未指定 --mnist-dir 時略過"""
    directory = request.config.getoption("--mnist-dir")
    if directory is None:
        pytest.skip("需要 --mnist-dir")
    directory = Path(directory)
    for images, labels in (
        ("train-images-idx3-ubyte", "train-labels-idx1-ubyte"),
        ("train-images-idx3-ubyte.gz", "train-labels-idx1-ubyte.gz"),
        ("train-images.idx3-ubyte", "train-labels.idx1-ubyte"),
    ):
        if (directory / images).exists() and (directory / labels).exists():
            return directory / images, directory / labels
    pytest.skip(f"{directory} 找不到 MNIST 訓練檔")


@pytest.fixture
def write_config(tmp_path):
    """寫出 JSON 設定檔，output_dir 預設為 tmp_path/out"""
    def _write(document: dict, name: str = "config.json") -> str:
        document = {"output_dir": str(tmp_path / "out"), **document}
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)
    return _write

