from __future__ import absolute_import

from kenstat.commands.list import List
from kenstat.commands.run import Run


commands_dict = {
    'run': Run.run,
    'list': List.run,
    'ls': List.run,
}
