# -*- coding: utf-8 -*-
"""
指令模組
"""

from . import bench
from . import train
from . import reports
