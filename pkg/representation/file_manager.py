"""
File management for PolarBox
Reads and writes .ine/.ext polyhedra files
"""
import logging
import os
from typing import Optional

from config import REP_FILE_ENCODING, REP_FILE_SUFFIXES
from representation.models import Rep
from representation.rep_format import emit_rep, parse_rep
from utils.errors import ParseError

logger = logging.getLogger(__name__)


class RepFileManager:
    def __init__(self, encoding: str = REP_FILE_ENCODING):
        self.encoding = encoding

    def load_rep(self, path: str) -> Rep:
        """Load an H-file or V-file"""
        try:
            with open(path, 'r', encoding=self.encoding) as f:
                text = f.read()
        except UnicodeDecodeError as e:
            raise ParseError(f"{path}: not a text file ({e.reason})")
        rep = parse_rep(text)
        logger.info("loaded %s-representation with %d rows from %s", rep.kind, rep.rows.n_rows, path)
        return rep

    def output_path(self, input_path: str, rep: Rep) -> str:
        """Sibling path carrying the suffix of the representation kind"""
        stem, _ = os.path.splitext(input_path)
        return f"{stem}{REP_FILE_SUFFIXES[rep.kind]}"

    def save_rep(self, rep: Rep, path: str, name: Optional[str] = None) -> str:
        """Write a representation and return the path written"""
        with open(path, 'w', encoding=self.encoding) as f:
            f.write(emit_rep(rep, name))
        logger.info("wrote %s-representation with %d rows to %s", rep.kind, rep.rows.n_rows, path)
        return path


# Global file manager instance
rep_files = RepFileManager()
