"""Generate one mkdocstrings page per module of the lacunary package."""

from pathlib import Path

import mkdocs_gen_files

SRC_ROOT = Path("src")
PACKAGE = "lacunary"

nav = mkdocs_gen_files.Nav()

for path in sorted((SRC_ROOT / PACKAGE).rglob("*.py")):
    module_path = path.relative_to(SRC_ROOT).with_suffix("")
    parts = tuple(module_path.parts)

    if parts[-1] == "__main__" or "__pycache__" in parts:
        continue
    if parts[-1] == "__init__":
        parts = parts[:-1]
        doc_path = Path(*parts, "index.md")
    else:
        doc_path = module_path.with_suffix(".md")

    nav[parts] = doc_path.as_posix()
    with mkdocs_gen_files.open(Path("reference", doc_path), "w") as fd:
        print(f"::: {'.'.join(parts)}", file=fd)
    mkdocs_gen_files.set_edit_path(Path("reference", doc_path), path)

with mkdocs_gen_files.open("reference/SUMMARY.md", "w") as nav_file:
    nav_file.writelines(nav.build_literate_nav())
