## \file relwsd/cli/__init__.py
# -*- coding: utf-8 -*-
""" Command line """

from .main import build_parser, main
from .pseudoword import PseudowordTask, build_pseudoword_task, split_documents, write_pseudoword_task
