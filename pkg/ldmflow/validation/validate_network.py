import logging
from collections import Counter
from ..Network import Network
from ..typing import ReportType


logger = logging.getLogger(__name__)


def validate_network(network: Network) -> ReportType:
    """List every structural inconsistency of a network; an empty list means the network is valid.

    Paths visiting a node twice are allowed but logged as a warning.
    """
    report = []
    report += _duplicates("arc", [arc.id for arc in network.arcs])
    report += _duplicates("path", [path.id for path in network.paths])
    report += _check_arcs(network)
    for path in network.paths:
        report += _check_path(network, path)
    report += _check_trips(network)
    return report


def _duplicates(kind, ids):
    return ["Duplicate {} id '{}'.".format(kind, item) for item, count in Counter(ids).items() if count > 1]


def _check_arcs(network):
    report = []
    nodes = set(network.nodes)
    for arc in network.arcs:
        if not arc.beta > 0:
            report.append("Arc '{}': beta must be strictly positive.".format(arc.id))
        if not arc.alpha >= 0:
            report.append("Arc '{}': alpha must be nonnegative.".format(arc.id))
        for role, node in (("tail", arc.tail), ("head", arc.head)):
            if node not in nodes:
                report.append("Arc '{}': unknown {} node '{}'.".format(arc.id, role, node))
    return report


def _check_path(network, path):
    if not path.arcs:
        return ["Path '{}' has no arcs.".format(path.id)]
    report = ["Path '{}' references unknown arc '{}'.".format(path.id, arc_id)
              for arc_id in path.arcs if not network.has_arc(arc_id)]
    if report:
        return report
    report += ["Path '{}' traverses arc '{}' more than once.".format(path.id, arc_id)
               for arc_id, count in Counter(path.arcs).items() if count > 1]
    for upstream, downstream in path.consecutive_pairs():
        if network.arc(upstream).head != network.arc(downstream).tail:
            report.append("Path '{}' is not connected: arc '{}' ends at '{}' but arc '{}' starts at '{}'.".format(
                path.id, upstream, network.arc(upstream).head, downstream, network.arc(downstream).tail))
    first = network.arc(path.arcs[0])
    last = network.arc(path.arcs[-1])
    if first.tail != path.origin:
        report.append("Path '{}' starts at '{}' instead of its origin '{}'.".format(path.id, first.tail, path.origin))
    if last.head != path.destination:
        report.append("Path '{}' ends at '{}' instead of its destination '{}'.".format(
            path.id, last.head, path.destination))
    visited = [first.tail] + [network.arc(arc_id).head for arc_id in path.arcs]
    if len(set(visited)) < len(visited):
        logger.warning("Path '%s' visits a node more than once.", path.id)
    return report


def _check_trips(network):
    report = []
    paths_by_od = network.paths_by_od()
    for od, demand in network.trips.items():
        if demand < 0:
            report.append("OD {}: demand must be nonnegative.".format(od))
        elif demand == 0:
            logger.warning("OD %s has zero demand.", od)
        if od not in paths_by_od:
            report.append("OD {} has no path.".format(od))
    for od, path_ids in paths_by_od.items():
        if od not in network.trips:
            report.append("Paths {} serve OD {} which is not in the trip table.".format(path_ids, od))
    return report
