import json
from dataclasses import dataclass
from dataclasses import field
from typing import Dict
from typing import List
from typing import Optional

from tabulate import tabulate

from Utility.utils import format_number
from Utility.utils import json_number

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_INCONCLUSIVE = 2
EXIT_ERROR = 3

VERDICT_EXIT_CODES = {True: EXIT_TRUE, False: EXIT_FALSE, None: EXIT_INCONCLUSIVE}


def _jsonable(value):
    if isinstance(value, dict):
        return {str(key): _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    return json_number(value)


@dataclass
class Report:
    """
    Result of one command. results holds plain values (numbers,
    strings, lists), lassos already in the text syntax; text holds
    verbatim blocks such as printed automata.

    JSON fields: command, verdict, exit_status, results, tolerances, text.
    """
    command: str
    verdict: Optional[object] = True
    results: Dict[str, object] = field(default_factory=dict)
    tolerances: Dict[str, float] = field(default_factory=dict)
    text: List[str] = field(default_factory=list)
    exit_status: Optional[int] = None

    def __post_init__(self):
        if self.exit_status is None:
            if isinstance(self.verdict, bool) or self.verdict is None:
                self.exit_status = VERDICT_EXIT_CODES[self.verdict]
            else:
                self.exit_status = EXIT_TRUE

    def to_text(self) -> str:
        rows = [["command", self.command], ["verdict", self._verdict_text()]]
        for key, value in self.results.items():
            rows.append([key, self._value_text(value)])
        for key, value in self.tolerances.items():
            rows.append([key, format_number(value)])
        parts = [tabulate(rows, tablefmt="plain")]
        parts.extend(self.text)
        return "\n\n".join(parts)

    def to_json(self) -> str:
        return json.dumps({"command"    : self.command,
                           "verdict"    : _jsonable(self.verdict),
                           "exit_status": self.exit_status,
                           "results"    : _jsonable(self.results),
                           "tolerances" : _jsonable(self.tolerances),
                           "text"       : self.text}, indent=2)

    def render(self, as_json=False) -> str:
        return self.to_json() if as_json else self.to_text()

    def _verdict_text(self):
        if self.verdict is True:
            return "yes"
        if self.verdict is False:
            return "no"
        if self.verdict is None:
            return "inconclusive"
        return str(self.verdict)

    @staticmethod
    def _value_text(value):
        if isinstance(value, (list, tuple)):
            if len(value) == 0:
                return "-"
            return "\n".join(Report._value_text(item) for item in value) if any(
                isinstance(item, (list, tuple, dict)) for item in value) else ", ".join(
                Report._value_text(item) for item in value)
        if isinstance(value, dict):
            return ", ".join("{}={}".format(key, Report._value_text(item)) for key, item in value.items())
        if value is None:
            return "-"
        return format_number(value)
