"""
Command-line front end.

- main: argparse verbs (eval, saddles, expand, gn, conjecture, stokes, paths,
  profile, reproduce)
- validators: input checks shared with the HTTP service
- output: Report documents and their json/table renderings
- reproduce: recomputation of the published tables and figures
"""
