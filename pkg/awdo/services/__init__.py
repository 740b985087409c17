# -*- coding: utf-8 -*-
"""
服務層模組
"""
from . import wdo_kernel
from . import cmaes
from . import awdo
from . import neural_net
from . import baseline_gd
from . import mnist
from . import objectives

# 輸出與分析
from . import export
from . import render
from . import analysis
