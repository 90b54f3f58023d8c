# -*- coding: utf-8 -*-
"""
.. module:: fovclutter
   :platform: Unix, Windows
   :synopsis: Foveated clutter models in Python

.. moduleauthor:: fovclutter team

[---------]

Copyright 2024 fovclutter team

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.

"""

import logging
import os
import time


def _has_file_handler(logger, log_folder):
    folder = os.path.abspath(log_folder)
    return any(isinstance(h, logging.FileHandler)
               and os.path.dirname(h.baseFilename) == folder
               for h in logger.handlers)


def get_bistream_logger(name, log_folder=None):
    """
    Sets up a logger that outputs INFO+ messages on stderr and, when a log
    folder is given, DEBUG+ messages in a timestamped log file. A folder
    given on a later call for the same name adds its file.

    :param name: a class __name__ attribute or module name
    :param log_folder: folder for the log file, no file logging if None
    :return: logging.Logger
    """
    logger = logging.getLogger(name)
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')

    if not logger.handlers:
        logger.setLevel(logging.DEBUG)

        # create a stream handler
        stream_handler = logging.StreamHandler()
        stream_handler.setLevel(logging.INFO)
        stream_handler.setFormatter(formatter)
        logger.addHandler(stream_handler)

        # Messages stay in this logger; the root logger is left to the caller
        logger.propagate = False

    if log_folder is not None and not _has_file_handler(logger, log_folder):
        os.makedirs(log_folder, exist_ok=True)
        filename = name + get_timestr() + '.log'
        file_handler = logging.FileHandler(os.path.join(log_folder, filename))
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def get_timestr():
    timestr = time.strftime("_%Y%m%d_%H%M%S")
    return timestr
