class Arc:
    """Directed arc with affine delay D(x) = alpha * x + beta, x being the arc volume at entry.

    Parameters are stored as given; consistency is checked by
    :func:`ldmflow.validation.validate_network`.
    """

    def __init__(self, id: str, tail: str, head: str, alpha: float, beta: float):
        # pylint: disable=redefined-builtin
        self.id = id
        self.tail = tail
        self.head = head
        self.alpha = float(alpha)
        self.beta = float(beta)

    def __eq__(self, other):
        return \
            self.id == other.id and \
            self.tail == other.tail and \
            self.head == other.head and \
            self.alpha == other.alpha and \
            self.beta == other.beta

    def __repr__(self):
        return "Arc({0!r}, {1!r} -> {2!r}, alpha={3}, beta={4})".format(
            self.id, self.tail, self.head, self.alpha, self.beta)

    def delay(self, volume):
        """Traversal time for a vehicle entering while the arc holds 'volume' vehicles."""
        return self.alpha * volume + self.beta
