#!/usr/bin/env python

# Python standard library
import json
import logging
import random

# external dependencies
import click

# imports from this very package
from combclass.exceptions import CombClassError, DescriptionError, Graph6Error, PreconditionError
from combclass.generators import RANDOM_KINDS


logger = logging.getLogger('combclass')


jobs_help = "Worker processes for sweep and enumerate. 1 runs everything in-process."
@click.group()
@click.option('-j', '--jobs', type=click.IntRange(min=1), default=1, envvar='COMBCLASS_JOBS', help=jobs_help)
@click.option('-s', '--seed', type=int, default=0, envvar='COMBCLASS_SEED', help='Seed of the randomized generators.')
@click.option('--deterministic/--unordered', default=True, help='Keep worker results in input order (default) or emit them as they finish.')
@click.option('--debug', is_flag=True)
@click.version_option(package_name='combclass')
@click.pass_context
def cli(ctx, *args, **kwargs):
    """ Command line interface for the combclass Python package. """

    debug = kwargs.get('debug')

    # Store the general CLI options in the context meta dictionary.
    # The name corresponds to the second half of the respective envvar:
    ctx.meta['JOBS'] = kwargs.get('jobs')
    ctx.meta['SEED'] = kwargs.get('seed')
    ctx.meta['DETERMINISTIC'] = kwargs.get('deterministic')

    logging.basicConfig(level='DEBUG' if debug else 'INFO')

def emit(document):
    from combclass.output_helpers import json_line
    click.echo(json_line(document))

def read_graphs(graphs):
    """ (graph6, Graph) for the GRAPH6 arguments, or for the lines of stdin if there are none """
    from combclass.graph6 import iter_graph6, parse_graph6, write_graph6
    try:
        if graphs:
            for text in graphs:
                yield text, parse_graph6(text)
        else:
            for g in iter_graph6(click.get_text_stream('stdin')):
                yield write_graph6(g), g
    except Graph6Error as e:
        raise click.UsageError(str(e))

def read_description(text):
    from combclass.structures import parse_description
    try:
        return parse_description(text)
    except DescriptionError as e:
        raise click.BadParameter(str(e))

def lookup_theorem(identifier, m):
    from combclass.characterize import theorem
    try:
        return theorem(identifier, m)
    except (KeyError, ValueError) as e:
        raise click.BadParameter(str(e).strip("'"), param_hint='--theorem')

graphs_argument = click.argument('graphs', nargs=-1, metavar='[GRAPH6] ...')

@cli.command()
@graphs_argument
@click.pass_context
def parse(ctx, graphs):
    """ decode graph6 lines to JSON """
    from combclass.output_helpers import graph_record
    for _, g in read_graphs(graphs):
        emit(graph_record(g))

@cli.command()
@graphs_argument
@click.option('-f', '--family', required=True, help='Comma separated forbidden family, eg. K1,3,Z2.')
@click.pass_context
def free(ctx, graphs, family):
    """ test graphs for F-freeness (exit 1 if some graph is not free) """
    from combclass.patterns import parse_family, is_free
    try:
        specs = parse_family(family)
    except DescriptionError as e:
        raise click.BadParameter(str(e), param_hint='--family')
    negative = False
    for graph6, g in read_graphs(graphs):
        result = is_free(g, specs)
        line = {'graph6': graph6, 'free': bool(result)}
        if not result:
            negative = True
            line['pattern'] = result.pattern.name
            line['witness'] = list(result.embedding.mapping)
        emit(line)
    if negative:
        ctx.exit(1)

@cli.command()
@graphs_argument
@click.option('-p', '--pattern', required=True, help='Pattern name, eg. P5, B1,2 or N(2,1,1).')
@click.pass_context
def find(ctx, graphs, pattern):
    """ find an induced copy of a pattern (exit 1 if some graph has none) """
    from combclass.patterns import parse_pattern, find_induced, make_pattern
    try:
        spec = parse_pattern(pattern)
    except DescriptionError as e:
        raise click.BadParameter(str(e), param_hint='--pattern')
    target = make_pattern(spec)
    negative = False
    for graph6, g in read_graphs(graphs):
        embedding = find_induced(g, target)
        negative |= embedding is None
        emit({'graph6': graph6, 'pattern': spec.name, 'embedding': list(embedding.mapping) if embedding else None})
    if negative:
        ctx.exit(1)

@cli.command()
@graphs_argument
@click.option('-t', '--target', type=click.Choice(('all', 'comb', 'h', 'fat')), default='all', help='Class to recognize.')
@click.option('--min-l', type=click.IntRange(min=5), default=5, help='Least parameter of fat structures.')
@click.pass_context
def recognize(ctx, graphs, target, min_l):
    """ recognize combs, members of H_0..H_8 and fat structures (exit 1 if nothing matches) """
    from combclass.structures import format_description, recognize_H_union, recognize_comb, recognize_fat
    recognizers = {
        'comb': recognize_comb,
        'h': recognize_H_union,
        'fat': lambda g: recognize_fat(g, min_l),
    }
    wanted = list(recognizers) if target == 'all' else [target]
    negative = False
    for graph6, g in read_graphs(graphs):
        line = {'graph6': graph6}
        for key in wanted:
            d = recognizers[key](g)
            line[key] = None if d is None else {'member': format_description(d), 'blocks': [list(block) for block in d.blocks]}
        negative |= all(line[key] is None for key in wanted)
        emit(line)
    if negative:
        ctx.exit(1)

@cli.command()
@click.argument('descriptions', nargs=-1, metavar='[DESCRIPTION] ...')
@click.option('-r', '--random', 'random_kind', type=click.Choice(RANDOM_KINDS), help='Emit random members of this kind instead.')
@click.option('-c', '--count', type=click.IntRange(min=0), default=1, help='Number of random members.')
@click.option('--max-order', type=click.IntRange(min=6), default=14, help='Largest order of random combs and H members.')
@click.pass_context
def build(ctx, descriptions, random_kind, count, max_order):
    """
    Build graphs from textual descriptions such as fatpath:1,3,3,3,1,
    comb:m=3;C=4;R=1,1,1;L=1,1,2, H3:u6=2 or Fprime:m=2.
    """
    from combclass.generators import random_member
    from combclass.output_helpers import graph_record
    from combclass.structures import build as build_graph
    if random_kind:
        rng = random.Random(ctx.meta.get('SEED'))
        members = [random_member(rng, random_kind, max_order) for _ in range(count)]
    elif descriptions:
        members = [read_description(text) for text in descriptions]
    else:
        raise click.UsageError('Give at least one DESCRIPTION or --random KIND')
    for d in members:
        emit(graph_record(build_graph(d), d))

theorem_option = click.option('-t', '--theorem', 'theorem_id', required=True, help='Theorem identifier, see `combclass info theorems`.')
m_option = click.option('-m', '--m', type=click.IntRange(min=1), help='The m of thm3.')

@cli.command()
@graphs_argument
@theorem_option
@m_option
@click.pass_context
def check(ctx, graphs, theorem_id, m):
    """ evaluate a theorem on single graphs (exit 1 on a counterexample) """
    from combclass.characterize import check as check_theorem
    thm = lookup_theorem(theorem_id, m)
    negative = False
    for graph6, g in read_graphs(graphs):
        verdict = check_theorem(g, thm)
        negative |= not verdict
        line = {'graph6': graph6, 'theorem': thm.identifier}
        line.update(verdict.to_json())
        emit(line)
    if negative:
        ctx.exit(1)

@cli.command()
@theorem_option
@m_option
@click.option('-n', '--n', 'max_n', type=click.IntRange(min=1), help='Sweep all connected graphs up to this order instead of reading stdin.')
@click.option('--min-n', type=click.IntRange(min=1), default=1, help='Smallest order swept with --n.')
@click.pass_context
def sweep(ctx, theorem_id, m, max_n, min_n):
    """ check a theorem on a stream of graphs (exit 1 on counterexamples) """
    import itertools
    from combclass.characterize import sweep as run_sweep
    from combclass.enumeration import MAX_ORDER, enumerate_connected
    from combclass.graph6 import iter_graph6
    from combclass.output_helpers import log_counterexamples
    thm = lookup_theorem(theorem_id, m)
    jobs = ctx.meta.get('JOBS', 1)
    deterministic = ctx.meta.get('DETERMINISTIC', True)
    if max_n is not None:
        if max_n > MAX_ORDER:
            raise click.BadParameter('graphs beyond %d vertices have to be streamed in on stdin' % MAX_ORDER, param_hint='--n')
        # the stream is generated in-process, the workers check
        stream = itertools.chain.from_iterable(enumerate_connected(n) for n in range(min_n, max_n + 1))
        report = run_sweep(stream, thm, jobs, deterministic)
    else:
        try:
            report = run_sweep(iter_graph6(click.get_text_stream('stdin')), thm, jobs, deterministic)
        except Graph6Error as e:
            raise click.UsageError(str(e))
    log_counterexamples(report)
    emit(report.to_json())
    if report.counterexamples:
        ctx.exit(1)

@cli.command(name='enumerate')
@click.option('-n', '--n', type=click.IntRange(min=1), required=True, help='Number of vertices.')
@click.option('--connected/--all', default=True, help='Only connected graphs are supported.')
@click.option('--format', 'output_format', type=click.Choice(('graph6', 'json')), default='graph6', help='Plain graph6 lines (pipe into sweep) or JSON records.')
@click.pass_context
def enumerate_cmd(ctx, n, connected, output_format):
    """ one canonical representative per isomorphism class """
    from combclass.enumeration import EnumConfig, enumerate_connected
    from combclass.graph6 import write_graph6
    from combclass.output_helpers import graph_record
    try:
        EnumConfig(n, connected_only=connected)
    except CombClassError as e:
        raise click.BadParameter(str(e))
    count = 0
    for g in enumerate_connected(n, ctx.meta.get('JOBS', 1), ctx.meta.get('DETERMINISTIC', True)):
        count += 1
        if output_format == 'json':
            emit(graph_record(g))
        else:
            click.echo(write_graph6(g))
    logger.info('%d connected graphs on %d vertices', count, n)

def construct_candidate(d):
    """ (graph, candidate, fan-cycle system or None) for a description, in builder numbering """
    from combclass.halin import fan_cycle_for_H, halin_for_fat, halin_from_fan_cycle, spanning_halin
    from combclass.structures import FatDescription, HExpansion, build as build_graph
    g = build_graph(d)
    if isinstance(d, FatDescription):
        return g, halin_for_fat(d), None
    if isinstance(d, HExpansion):
        f = fan_cycle_for_H(g, d)
        return g, halin_from_fan_cycle(g, f), f
    return g, spanning_halin(g), None

@cli.command()
@graphs_argument
@click.option('--construct', 'descriptions', multiple=True, metavar='DESCRIPTION', help='Build the graph of a description and construct its Halin subgraph.')
@click.option('--verify', is_flag=True, help='Read candidate JSON lines from stdin and verify them.')
@click.pass_context
def halin(ctx, graphs, descriptions, verify):
    """ construct or verify spanning Halin subgraphs (exit 1 on failure) """
    from combclass.graph6 import parse_graph6, write_graph6
    from combclass.halin import HalinCandidate, spanning_halin, verify_halin
    negative = False
    if verify:
        for number, text in enumerate(click.get_text_stream('stdin'), start=1):
            if not text.strip():
                continue
            try:
                data = json.loads(text)
                g = parse_graph6(data['graph6'])
                candidate = HalinCandidate.from_json(data)
            except (ValueError, KeyError, TypeError) as e:
                raise click.UsageError('line %d: not a Halin candidate: %s' % (number, e))
            result = verify_halin(g, candidate)
            negative |= not result
            emit({'graph6': data['graph6'], 'ok': result.ok, 'reason': result.reason})
    elif descriptions:
        for text in descriptions:
            d = read_description(text)
            try:
                g, candidate, f = construct_candidate(d)
            except PreconditionError as e:
                logger.warning('%s: %s', text, e)
                negative = True
                continue
            line = {'graph6': write_graph6(g), 'description': text}
            line.update(candidate.to_json())
            if f is not None:
                line['fan_cycle'] = f.to_json()
            emit(line)
    else:
        for graph6, g in read_graphs(graphs):
            try:
                candidate = spanning_halin(g)
            except PreconditionError as e:
                logger.warning('%s: %s', graph6, e)
                negative = True
                continue
            line = {'graph6': graph6}
            line.update(candidate.to_json())
            emit(line)
    if negative:
        ctx.exit(1)

@cli.command()
@graphs_argument
@click.option('--method', type=click.Choice(('auto', 'brute', 'fat')), default='auto', help='auto dispatches {K1,3, B1,1}-free graphs and brute forces the rest.')
@click.pass_context
def alpha(ctx, graphs, method):
    """ independence numbers (exit 1 if --method fat meets a graph that is not fat) """
    from combclass.indep import alpha_B11free, alpha_bruteforce, alpha_fat
    from combclass.structures import recognize_fat
    negative = False
    for graph6, g in read_graphs(graphs):
        line = {'graph6': graph6}
        if method == 'fat':
            d = recognize_fat(g, 5)
            if d is None:
                negative = True
                line.update({'alpha': None, 'witness': None, 'method': 'fat_formula'})
                emit(line)
                continue
            result = alpha_fat(d)
        elif method == 'brute':
            result = alpha_bruteforce(g)
        else:
            try:
                result = alpha_B11free(g)
            except PreconditionError as e:
                logger.debug('%s: %s, falling back to branch and bound', graph6, e)
                result = alpha_bruteforce(g)
        line.update(result.to_json())
        emit(line)
    if negative:
        ctx.exit(1)

@cli.group()
@click.pass_context
def info(ctx, *args, **kwargs):
    """ list the pattern graphs H1..H8 and the theorems """

@info.command()
@click.pass_context
def hgraphs(ctx, *args, **kwargs):
    """
    List the pattern graphs H1..H8 and their expandable vertices
    """
    from combclass.hgraphs import HGraphsManager
    from combclass.output_helpers import textual_hgraph_description
    click.echo(textual_hgraph_description(HGraphsManager().iter_elements()), nl=False)

@info.command()
@click.pass_context
def theorems(ctx, *args, **kwargs):
    """
    List the choices for --theorem
    """
    from combclass.characterize import TheoremsManager
    from combclass.output_helpers import textual_theorem_description
    click.echo(textual_theorem_description(TheoremsManager().iter_elements()), nl=False)

if __name__ == '__main__':
    cli()
