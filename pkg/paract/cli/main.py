"""The `paract` command line.

Results go to stdout as JSON {"command": ..., "result": ...}; logs and error diagnostics go
to stderr. Exit codes: 0 success, 1 domain error, 2 malformed input.
"""
import logging
import os
import sys
from typing import Optional

import click

from paract import __version__
from paract.algebra.birget_rhodes import br_count, br_verify_inverse_monoid
from paract.algebra.groupoid import groupoid_build, groupoid_verify, to_dot as groupoid_dot
from paract.cli.fixtures import FIXTURES, gen_fixture
from paract.cli.suite import run_suite
from paract.core.actions import GlobalAction, PartialAction, hat_action, is_free, require_valid
from paract.core.axioms import validate_partial_action
from paract.core.groups import FiniteGroup, named_group
from paract.errors import BadParams, ParactError, SchemaError
from paract.filetools.json_file import dumps, write_json
from paract.filetools.schema import dump_instance, read_instance
from paract.globalization.envelope import check_envelope, envelope, to_dot as envelope_dot
from paract.globalization.quotient_group import check_homeo, quotient_group_action
from paract.orbits.quotient import orbit_quotient
from paract.orbits.sections import section_finite
from paract.tower.chain import build_chain, parse_chain
from paract.tower.descent import tower_descent

logger = logging.getLogger('paract')


class ParactGroup(click.Group):
    """Maps ParactError to a JSON diagnostic on stderr and its exit code"""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except ParactError as e:
            click.echo(dumps({'error': type(e).__name__, 'message': str(e)}, indent=0), err=True)
            ctx.exit(e.exit_code)


def emit(command: str, result: dict):
    click.echo(dumps({'command': command, 'result': result}))


def parse_elements(text: Optional[str]) -> Optional[list[int]]:
    """'0,2' -> [0, 2]"""
    if text is None:
        return None
    try:
        return [int(g) for g in text.split(',') if g.strip()]
    except ValueError:
        raise BadParams(f'expected comma separated group elements, got {text!r}')


def load_action(path: str) -> PartialAction:
    """The action in path, as a partial action that satisfies the axioms"""
    obj = read_instance(path)
    if isinstance(obj, GlobalAction):
        return obj.as_partial()
    if not isinstance(obj, PartialAction):
        raise SchemaError(f'{path} holds a group, expected an action')
    return require_valid(obj)


def load_group(spec: str) -> FiniteGroup:
    """A built-in group name, or a file holding a group or an action"""
    if not os.path.exists(spec):
        return named_group(spec)
    obj = read_instance(spec)
    return obj if isinstance(obj, FiniteGroup) else obj.group


@click.group(cls=ParactGroup)
@click.version_option(__version__)
@click.option('-v', '--verbose', count=True, help='-v for info, -vv for debug logging on stderr')
def cli(verbose: int):
    """Partial group actions at finite scale"""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level, force=True,
                        format='%(levelname)s %(name)s: %(message)s')


@cli.command()
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def validate(ctx, file):
    """Check a group or an action against its axioms"""
    obj = read_instance(file)
    if isinstance(obj, FiniteGroup):
        emit('validate', {'kind': 'group', 'order': obj.order, 'valid': True})
        return
    if isinstance(obj, GlobalAction):
        emit('validate', {'kind': 'global_action', 'valid': True})
        return
    report = validate_partial_action(obj)
    emit('validate', {'kind': 'partial_action', **report.to_dict()})
    if not report.valid:
        ctx.exit(1)


@cli.command()
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('--subgroup', help='Subgroup H as comma separated elements (default: the whole group)')
def orbits(file, subgroup):
    """Orbit classes X/~H"""
    pa = load_action(file)
    q = orbit_quotient(pa, parse_elements(subgroup))
    emit('orbits', q.to_dict())


@cli.command()
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
def section(file):
    """A section of the orbit map of a free partial action"""
    pa = load_action(file)
    s = section_finite(pa)
    emit('section', {'section': s.to_dict(), 'representatives': [pa.label(x) for x in s.points()]})


@cli.command()
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('--subgroup', help='Normal subgroup H for the partial action of G/H on X/~H')
@click.option('--dot', is_flag=True, help='Print the action on X_G as a Graphviz digraph')
@click.option('--check-hat', is_flag=True, help='Cross-check the classes against the orbits of the hat action')
def globalize(file, subgroup, dot, check_hat):
    """The enveloping space X_G with its global action and embedding"""
    pa = load_action(file)
    env = envelope(pa)
    if dot:
        click.echo(envelope_dot(env))
        return
    result = {**env.to_dict(), 'size': len(env), 'failures': check_envelope(env)}
    if check_hat:
        hat = hat_action(pa)
        result['hat'] = {'free': is_free(hat), 'classes_match': orbit_quotient(hat).classes == env.classes}
    if subgroup is not None:
        qa = quotient_group_action(pa, parse_elements(subgroup))
        result['quotient_group'] = {**qa.to_dict(), 'homeo': check_homeo(qa)}
    emit('globalize', result)


@cli.command('tower-section')
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('--chain', help='Normal chain as "g,g,...;g,...;0" (default: built from maximal normal subgroups)')
def tower_section_cmd(file, chain):
    """A section of the orbit map by descending a normal chain"""
    pa = load_action(file)
    chain = parse_chain(chain, pa.group) if chain else build_chain(pa.group)
    steps = tower_descent(pa, chain)
    final = steps[-1][1]
    emit('tower-section', {
        'chain': chain.to_list(),
        'steps': [{'subgroup': sorted(N), 'section': r.to_dict()} for N, r in steps],
        'section': final.to_dict(),
        'representatives': [pa.label(x) for x in final.points()],
    })


@cli.command()
@click.argument('group')
@click.pass_context
def br(ctx, group):
    """Count and verify the Birget-Rhodes expansion of GROUP (a name like Z4, or a file)"""
    G = load_group(group)
    report = br_verify_inverse_monoid(G)
    emit('br', {'count': br_count(G.order), 'report': report.to_dict()})
    if not report.ok:
        ctx.exit(1)


@cli.command()
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('--dot', is_flag=True, help='Print the groupoid as a Graphviz digraph')
def groupoid(file, dot):
    """The action groupoid: arrows, compositions and its verification"""
    pa = load_action(file)
    gpd = groupoid_build(pa)
    if dot:
        click.echo(groupoid_dot(gpd))
        return
    emit('groupoid', {'groupoid': gpd.to_dict(), 'report': groupoid_verify(gpd).to_dict()})


@cli.command()
@click.argument('name', type=click.Choice(list(FIXTURES)))
@click.option('--group', 'group_name', help='Built-in group name, e.g. Z4, S3, D4')
@click.option('--subset', 'U', help='Subset U of the group, comma separated')
@click.option('-m', '--points', 'm', type=int, help='Number of points (trivial)')
@click.option('--seed', type=int, help='Seed of the random fixtures')
@click.option('--max-points', type=int, help='Largest space of the random fixtures')
@click.option('-o', '--output', type=click.Path(dir_okay=False, writable=True), help='Write to a file instead of stdout')
def gen(name, group_name, U, m, seed, max_points, output):
    """Generate a named instance file"""
    params = {'group': group_name, 'U': parse_elements(U), 'm': m, 'seed': seed, 'max_points': max_points}
    data = dump_instance(gen_fixture(name, params), name=name)
    if output:
        write_json(output, data)
        logger.info('wrote %s', output)
    else:
        click.echo(dumps(data))


@cli.command()
@click.option('-n', '--instances', type=int, help='Number of random instances')
@click.option('--seed', type=int, help='Seed of the first instance')
@click.option('--jobs', type=int, help='Worker processes')
@click.pass_context
def suite(ctx, instances, seed, jobs):
    """Run the property checks over random instances"""
    report = run_suite(instances, seed, jobs)
    emit('suite', report.to_dict())
    if not report.ok:
        ctx.exit(1)


if __name__ == '__main__':
    cli()
