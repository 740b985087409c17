# -*- coding: utf-8 -*-
"""
Adaptive Wind Driven Optimization - 無梯度神經網路訓練
"""

__version__ = "1.0.0"
