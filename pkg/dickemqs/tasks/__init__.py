# Copyright (c) dickemqs contributors.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

__all__ = ["SweepTask", "Fig1Task", "Fig2Task", "CompareTask", "ExactTask"]

from .task import CompareTask, ExactTask, Fig1Task, Fig2Task, SweepTask
