from scenario.codec import decode_int, decode_int_matrix, decode_int_vector, decode_rational, dumps, encode_value, load_json
from scenario.kinds import HANDLERS, Outcome
from scenario.model import CorpusSummary, Diff, Report, Scenario, ScenarioKind
from scenario.render import render_report, render_summary
from scenario.runner import canonical, compare, discover, execute, load_scenario, run_corpus, run_scenario
