from command.corpus import RunCorpus
from command.scenario import KIND_COMMANDS, RunKind, RunScenario, kind_commands
