"""CLI entry point for the extremal toolkit."""

import typer

from extremal.cli_commands.coalitions import coalition_app
from extremal.cli_commands.domination import cds_app
from extremal.cli_commands.fairness import fair_app
from extremal.cli_commands.oracles import oracle_app
from extremal.cli_commands.packing import packing_app
from extremal.cli_commands.probability import prob_app

app = typer.Typer(
    name="extremal",
    help="Constructive extremal combinatorics - every certificate is re-checked before exit",
)

# Add subcommand groups (namespaces)
app.add_typer(packing_app, name="packing")
app.add_typer(fair_app, name="fairness")
app.add_typer(cds_app, name="domination")
app.add_typer(coalition_app, name="coalitions")
app.add_typer(prob_app, name="prob")
app.add_typer(oracle_app, name="oracle")


def _register_root_aliases(source_app: typer.Typer) -> None:
    """Register commands from source_app at the root level (`extremal pack` etc.)."""

    for cmd in source_app.registered_commands:
        callback = cmd.callback
        if callback is None:
            continue
        command_name = cmd.name or callback.__name__.replace("_", "-")
        decorator = app.command(  # type: ignore[misc]
            name=command_name,
            help=cmd.help,
            short_help=cmd.short_help,
            add_help_option=cmd.add_help_option,
            hidden=cmd.hidden,
            deprecated=cmd.deprecated,
            rich_help_panel=cmd.rich_help_panel,
            no_args_is_help=cmd.no_args_is_help,
            context_settings=cmd.context_settings,
        )
        decorator(callback)


_register_root_aliases(packing_app)
_register_root_aliases(fair_app)
_register_root_aliases(cds_app)
_register_root_aliases(coalition_app)
_register_root_aliases(prob_app)


if __name__ == "__main__":
    app()
