"""
Sweeping parameter grids
========================

Every closed form is compared with the generic engine over a grid.  Known
deviations show up as warnings; anything else is a failure.  The same
sweeps are available from the command line::

    aperykit sweep gamma4 --a 7..50 --d 1..40
    aperykit sweep geo --a 7..30 --r 2..3 --h 1..2 --n 1..3 --d auto
"""

from aperykit import sweep_gamma4, sweep_geo

# %%
# Gamma4 over a small grid

res = sweep_gamma4(range(7, 25), range(1, 13), gorenstein=True)
print(res.summary())

# %%
# Geometric family, with invalid instances skipped and recorded

res = sweep_geo(range(7, 16), (2, 3), (1, 2), (1, 2))
summary = res.summary()
print(summary)
print(res.skipped[0])
