import logging

logger = logging.getLogger(__name__)

class ElementsManager(object):
    """
    A catalog of named, immutable records (the H graphs, the theorems).

    Elements are compared for equality and need an ``identifier``
    attribute. Lookups go through :py:meth:`normalize`, so subclasses
    decide how forgiving the spelling of an identifier may be.
    """
    DEFAULT_ELEMENTS = ()
    ELEMENT_NAME = "element"

    def __init__(self, elements=None):
        self._elements = list(elements if elements else self.DEFAULT_ELEMENTS)

    @classmethod
    def normalize(cls, identifier):
        return identifier.strip()

    def register(self, element, pos=None):
        if element in self._elements:
            logger.warning("Won't register %s as it's already present: %s", self.ELEMENT_NAME, element.identifier)
            return
        if pos is None:
            pos = len(self._elements)
        self._elements.insert(pos, element)

    def deregister(self, element):
        if element not in self._elements:
            logger.warning("Trying to deregister a %s that's not registered currently: %s", self.ELEMENT_NAME, element.identifier)
            return
        self._elements.remove(element)

    def get(self, identifier):
        """
        :raises KeyError: if no element carries the identifier
        """
        key = self.normalize(identifier)
        for element in self._elements:
            if self.normalize(element.identifier) == key:
                return element
        raise KeyError('Unknown %s: %s (choose from %s)' % (self.ELEMENT_NAME, identifier, ', '.join(self.iter_identifiers())))

    def iter_identifiers(self):
        for element in self._elements:
            yield element.identifier

    def iter_elements(self):
        for element in self._elements:
            yield element
