# %% [markdown]
# Reports from the command line
#
# The same analysis as the tower demo, through INI configs.  Output is
# deterministic for a given seed.

# %%
import subprocess
import sys
from importlib import resources

cfgs = resources.files("solenoid_lab.configs")


def cli(*args):
    p = subprocess.run([sys.executable, "-m", "solenoid_lab.cli", *args], capture_output=True, text=True)
    print(p.stdout, p.stderr, f"[exit {p.returncode}]", sep="")


cli("analyze", str(cfgs / "dyadic.ini"), "--depth", "3", "--format", "dot")

# %%
cli("analyze", str(cfgs / "genus2_s3.ini"))

# %%
cli("cosets", str(cfgs / "klein.ini"), "--subgroup", '"a a", "b b"')

# %%
cli("model", str(cfgs / "s3_model.ini"))
