"""
Example demonstration of mufgl
This script walks through the formal group law of complex cobordism and the
identities mufgl verifies, printing each value as the CLI would.
"""

import logging

import fgl
import hurewicz
import symfunc
from render import divided_text, poly_text, report_text, series_text, twist_text


def demo_mufgl(order: int = 4):
    """Demonstrate the main computations and checks"""

    print("📐 Miscenko's logarithm and its inverse")
    print(f"   log_MU(z) = {series_text(fgl.miscenko_log(order))}")
    print(f"   exp_MU(z) = {series_text(fgl.fgl_exp(order))}")

    print("\n➕ Formal group sum, before and after the Hurewicz map")
    F = fgl.fgl_sum(3)
    print(f"   z0 +_MU z1 = {F!r}")
    print(f"   image      = {fgl.hurewicz_image(F)!r}")

    print("\n🔢 Characteristic numbers of projective spaces")
    for n in range(1, order):
        agree = "✅" if hurewicz.hurewicz_cp(n) == hurewicz.chern_oracle_cp(n) else "❌"
        print(f"   h(CP_{n}) = {poly_text(hurewicz.hurewicz_cp(n))}  {agree} oracle")

    print("\n🧮 Partition expansion of b^MU_n in the divided-power basis")
    for n in range(1, order):
        print(f"   h(b^MU_{n}) = {divided_text(hurewicz.hurewicz_bmu(n))}")

    print("\n🌀 Twisted projective space")
    print(f"   CP_{order}(t w) = {twist_text(hurewicz.twist_expansion(order))}")

    print("\n🔁 Power sums in the complete basis")
    for n in range(1, order):
        print(f"   p{n} = {poly_text(symfunc.express('p', n, 'h'))}")

    print("\n🧪 Checks")
    reports = [fgl.hopf_check(order), fgl.additive_image_check(order),
               hurewicz.integrality_check(order), hurewicz.divisibility_suite(order + 2),
               hurewicz.twist_check(order), symfunc.verify_symfunc(order)]
    reports += fgl.group_law_checks(order)
    for report in reports:
        print(f"   {report_text(report)}")


if __name__ == "__main__":
    logging.basicConfig(level=logging.WARNING)
    print("🎬 mufgl demo")
    print("=" * 50)
    demo_mufgl()
