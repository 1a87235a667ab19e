"""Regenerate the bundled group tables from their presentations."""
from pathlib import Path

from semischur.groups import _BUILDERS, build_group
from semischur.table import write_cay

out = Path(__file__).resolve().parents[1] / "src" / "semischur" / "data" / "groups.cay"
tables = [build_group(name) for name in _BUILDERS]
out.write_text(write_cay(tables))
print(f"wrote {len(tables)} tables to {out}")
