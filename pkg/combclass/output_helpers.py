import json
import logging

from combclass.graph6 import write_graph6
from combclass.structures import format_description

logger = logging.getLogger(__name__)

def json_line(document):
    """ one compact JSON document per line, keys sorted for byte-stable output """
    return json.dumps(document, sort_keys=True, separators=(',', ':'))

def graph_record(g, description=None):
    record = {'graph6': write_graph6(g), 'n': g.n, 'edges': [list(edge) for edge in g.edges()]}
    if description is not None:
        record['description'] = format_description(description)
    return record

def textual_hgraph_description(hgraphs_to_include):
    output = ""
    fmt = " {name:4s} {order:>5s} {size:>5s}  {expandable:16s} {edges}\n"
    output += fmt.format(name="Name", order="Order", size="Edges", expandable="Expandable", edges="Adjacency")
    for h in hgraphs_to_include:
        expandable = ",".join(h.expandable) if h.expandable else "-"
        edges = " ".join("%s-%s" % edge for edge in h.edges)
        output += fmt.format(name=h.identifier, order=str(len(h.labels)), size=str(len(h.edges)), expandable=expandable, edges=edges)
    return output

def textual_theorem_description(theorems_to_include):
    output = ""
    fmt = " {identifier:8s} {statement}\n"
    output += fmt.format(identifier="Name", statement="Statement")
    for theorem in theorems_to_include:
        output += fmt.format(identifier=theorem.identifier, statement=theorem.statement)
    output += fmt.format(identifier="thm3", statement="thm3(m) for any m >= 1, pass --m")
    return output

def log_counterexamples(report, level=logging.WARNING):
    for item in report.counterexamples:
        logger.log(level, "  Counterexample to {theorem}: {graph6}  ({direction})".format(theorem=report.theorem, **item))
