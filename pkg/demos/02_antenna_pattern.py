# %% [markdown]
# # The sinc antenna pattern
#
# The pattern is |sinc(beta / (beamwidth / 2))| with the normalized sinc, so
# its first null falls at half the beamwidth. With the received power
# attenuated on both transmit and receive (exponent 2) the loss in dB doubles.

# %%
import numpy as np

from spherecal import AntennaPattern, OutOfLobeError, pattern_factor, pattern_loss_db

one_way = AntennaPattern(beamwidth_deg=1.0, pattern_exponent=1)
two_way = AntennaPattern(beamwidth_deg=1.0, pattern_exponent=2)

for beta in np.linspace(0, 0.45, 10):
    print(
        f"beta={beta:.3f}  factor={pattern_factor(beta, two_way):.5f}  "
        f"loss(1-way)={pattern_loss_db(beta, one_way):.3f} dB  "
        f"loss(2-way)={pattern_loss_db(beta, two_way):.3f} dB"
    )

# %% [markdown]
# At the first null the loss is unbounded, so the scalar call refuses it.

# %%
try:
    pattern_loss_db(0.5, two_way)
except OutOfLobeError as exc:
    print("refused:", exc)
