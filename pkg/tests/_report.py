# pass/fail lines from test_acceptance, echoed in the terminal summary
LINES = []
