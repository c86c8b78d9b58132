import numpy


def project_od(vec, weights, demand: float) -> numpy.ndarray:
    """Euclidean projection of 'vec' onto {y >= 0 : sum(weights * y) = demand}.

    The projection is ``max(0, vec - lam * weights)``. The multiplier lam is found exactly by sorting
    the ratios vec / weights in decreasing order and keeping the largest active set for which every
    member stays positive.

    For example

    .. code-block:: python

        from ldmflow.equilibrium import project_od

        print(project_od([3.0, 1.0], [1.0, 1.0], 2.0))

    Should output

    .. code-block:: console

        [2. 0.]

    """
    vec = numpy.asarray(vec, dtype="float")
    weights = numpy.asarray(weights, dtype="float")
    assert vec.shape == weights.shape, "Expected one weight per value."
    assert numpy.all(weights > 0), "Expected weights to be strictly positive."
    assert demand >= 0, "Expected demand to be nonnegative."
    if demand == 0 or vec.size == 0:
        return numpy.zeros_like(vec)

    order = numpy.argsort(-vec / weights, kind="stable")
    ratios = vec[order] / weights[order]
    multipliers = (numpy.cumsum(weights[order] * vec[order]) - demand) / numpy.cumsum(weights[order] ** 2)
    n_active = numpy.count_nonzero(ratios - multipliers > 0)
    return numpy.maximum(vec - multipliers[n_active - 1] * weights, 0.0)
