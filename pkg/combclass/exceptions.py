
class CombClassError(Exception):
    pass

class GraphArgumentError(CombClassError, ValueError):
    pass

class Graph6Error(CombClassError, ValueError):
    """
    Raised for malformed graph6 input.

    :ivar int offset: Byte offset inside the offending line.
    :ivar int line: 1-based line number when the text came from a stream, else None.
    """

    def __init__(self, problem, offset, line=None):
        self.problem = problem
        self.offset = offset
        self.line = line
        super(Graph6Error, self).__init__(str(self))

    def __str__(self):
        where = 'byte %d' % self.offset
        if self.line is not None:
            where = 'line %d, %s' % (self.line, where)
        return '%s (%s)' % (self.problem, where)

class DescriptionError(CombClassError, ValueError):
    pass

class PreconditionError(CombClassError):
    pass

class TheoremViolation(CombClassError):
    pass
