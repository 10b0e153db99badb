import os.path
from arpeggio import NoMatch
from arpeggio.cleanpeg import ParserPEG

GRAMMAR_PATH = os.path.join(os.path.dirname(__file__), 'notation.peg')

class NotationError(Exception):
    """Raised when a text does not follow the notation"""
    pass

class IncompleteParseError(NotationError):
    pass

class EmptyParseError(NotationError):
    pass

class ParserNotation():
    """
    Class for parsing the text notation (wrapper around an Arpeggio parser)

    Attributes:
        parser (arpeggio.cleanpeg.ParserPEG): The Arpeggio parser
    """

    def __init__(self, grammarPath: str = GRAMMAR_PATH, root: str = 'sequence',
        **kwargs) -> None:
        """
        Args:
            grammarPath (:obj:`str`, optional): path to the grammar file
                (default is notation/notation.peg)
            root (:obj:`str`, optional): the root element of the parser,
                ``'cartan'`` or ``'sequence'`` (default is 'sequence')
        """
        if not os.path.exists(grammarPath):
            raise Exception(f'Grammar file ({ grammarPath }) does not exist')

        with open(grammarPath, 'r') as handle:
            grammar = handle.read()

        self.root = root
        self.parser = ParserPEG(grammar, root, skipws=False, memoization=True, **kwargs)

    def parse(self, text: str, debug=False):
        """Parse a string

        Args:
            text (str): The string to parse

        Raises:
            NotationError: If the string does not match the grammar

        Returns:
            arpeggio.NonTerminal: The parse tree
        """
        _debug = self.parser.debug
        self.parser.debug = debug or _debug
        try:
            parse = self.parser.parse(text)
        except NoMatch as error:
            raise NotationError(f'Cannot read {text!r} as {self.root}: {error}') from error
        finally:
            self.parser.debug = _debug

        if type(parse) == list and len(parse) == 0 and len(text) > 0:
            raise EmptyParseError()
        if parse.position_end < len(text):
            raise IncompleteParseError(f'Parsing ended at position {parse.position_end} (input length {len(text)})')
        return parse
