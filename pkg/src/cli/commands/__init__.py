from src.cli.commands import dictatorship, instances, pipelines, reductions, solvers

COMMAND_GROUPS = [instances, reductions, solvers, dictatorship, pipelines]

__all__ = ["COMMAND_GROUPS"]
