"""From fitted regimes to price scenarios.

Fits a VAR(1) with stable innovations in each regime of the fixture, checks
the residual laws, and draws a year of weekly price fans for copper, USD/PLN
and copper in PLN.  Writes one SVG per fan into ``demo_out/``.
Run with ``python demos/scenarios.py``.
"""

import warnings
from pathlib import Path

import numpy as np

from stablerisk import fixture
from stablerisk.frame import ingest, log_returns
from stablerisk.gof import coverage_rates, mc_pvalue
from stablerisk.regimes import regime_mask
from stablerisk.scenario import fan_svg, product_paths, quantile_fan, returns_to_prices
from stablerisk.var_model import fit, residuals, simulate

out = Path("demo_out")
out.mkdir(exist_ok=True)
d = fixture.bundled_dir()
prices = ingest([d / "cu.csv", d / "usdpln.csv"], names=list(fixture.NAMES))
rets = log_returns(prices)
# the planted spell stands in for a detected regime here
regime1 = regime_mask(len(rets), [fixture.REGIME1])

for tag, mask in (("regime1", regime1), ("regime2", ~regime1)):
    model = fit(rets, "full", mask=mask, regime_tag=tag)
    print(f"\n{tag}: theta =\n{np.round(model.theta, 4)}  spectral radius {model.spectral_radius:.3f}")
    # residual row t belongs to return row t + 1; keep lag pairs inside the regime
    res = residuals(model, rets).take(np.flatnonzero(mask[1:] & mask[:-1]))
    for name, law in zip(model.names, model.residual_params):
        z = res.columns[name]
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            ks_g = mc_pvalue(z, "gaussian", n_boot=199, seed=1)[0].p_value
        cov = coverage_rates(z, law)
        print(f"  {name:7s} alpha={law.alpha:.3f} sigma={law.sigma:.4f}  Gaussian KS p={ks_g:.3f}  "
              f"coverage {np.round(cov.rates, 3)}")

    sims = simulate(model, 52, 5000, seed=7)
    base = [float(prices.columns[n][-1]) for n in model.names]
    pp = [returns_to_prices(sims[:, :, i], base[i]) for i in range(2)]
    pp.append(product_paths(pp[0], pp[1]))
    for label, paths in zip(("cu", "usdpln", "cu_pln"), pp):
        fan = quantile_fan(paths)
        (out / f"{tag}_{label}.svg").write_text(fan_svg(fan, title=f"{label} {tag}"))
        print(f"  {label:7s} 52-week 10-90% band {fan.band(0.1, 0.9)[-1]:.4g} around median {fan.level(0.5)[-1]:.4g}")

print(f"\nFans written to {out.resolve()}")
