"""Draw which integers the first few levels of a collection can reach.

Writes coverage.svg next to this script and prints the text version.
"""

from pathlib import Path

from addsys import ExplicitPeriodic
from addsys.render import coverage_strips, render_svg, render_text

spec = ExplicitPeriodic([{0, 1}, {0, 1, -2, 3}, {0, 1, -1}], cycle_from=2)
strips = coverage_strips(spec, 3, -20, 40)
print(render_text(strips))

out = Path(__file__).with_name("coverage.svg")
out.write_text(render_svg(strips, title="levels 0..3"), encoding="utf-8")
print("wrote", out)
