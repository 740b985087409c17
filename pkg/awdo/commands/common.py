# -*- coding: utf-8 -*-
"""
指令共用工具 - 讀設定、載資料、平行評估
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from typing import Iterator, Optional

import numpy as np

from ..exceptions import DataError
from ..models.experiment import DatasetSource, ExperimentConfig, load_experiment_config
from ..models.network import Dataset
from ..services.mnist import load_raw_mnist, synthetic_dataset, to_dataset

logger = logging.getLogger(__name__)


def load_config(path: Optional[str]) -> ExperimentConfig:
    """讀設定檔；未指定時使用內建預設（seed 0）"""
    if path is None:
        return ExperimentConfig(seed=0)
    return load_experiment_config(path)


def experiment_streams(config: ExperimentConfig) -> tuple:
    """由 seed 分出 (資料, 初始化) 兩條亂數串流"""
    data_rng, init_rng = np.random.default_rng(config.seed).spawn(2)
    return data_rng, init_rng


def load_dataset(config: ExperimentConfig, data_rng: np.random.Generator) -> Dataset:
    """依設定載入訓練集"""
    if config.dataset == DatasetSource.SYNTHETIC:
        data = synthetic_dataset(config.synthetic_m, config.network, config.synthetic_separability, data_rng)
    else:
        if config.images_path is None or config.labels_path is None:
            raise DataError("未指定 images_path / labels_path")
        raw = load_raw_mnist(config.images_path, config.labels_path)
        data = to_dataset(raw, config.subset_size)

    logger.info(f"📊 訓練集：{data.m} 筆，{data.X.shape[1]} 個特徵")
    return data


@contextmanager
def executor_for(threads: int) -> Iterator[Optional[ThreadPoolExecutor]]:
    """threads > 1 時提供執行緒池，否則為 None（單執行緒）"""
    if threads <= 1:
        yield None
        return
    with ThreadPoolExecutor(max_workers=threads) as executor:
        yield executor
