"""
Labeling schemes and their counts
=================================

Runs every scheme, shows the four counts, and compares them with the counts
that were published alongside each construction.
"""

from spclab import (corona_scheme, helm_dumbbell_scheme, path_square_scheme,
                    spltg_bull_scheme, spltg_star_scheme)

outputs = [spltg_star_scheme(8), spltg_star_scheme(7), spltg_bull_scheme(),
           path_square_scheme(8), path_square_scheme(9), corona_scheme(4)]
for out in outputs:
    agree = {True: "matches", False: "DIFFERS", None: "-"}[out.printed_agrees]
    print(f"{str(out.scheme):>16}  {out.report.summary():<28} published: {agree}")

# For odd n the star scheme lands on (3n-1)/2 positive edges; the published
# orientation is the reverse. The verdict is unaffected.
p = spltg_star_scheme(7).printed
print("published for n=7:", p.e_pos, "positive,", p.e_neg, "negative")

# The corona counts are 2n each; the published n/2 cannot fit 4n vertices.
c = corona_scheme(4).printed
print("published corona n=4:", c.v_pos, c.v_neg, c.e_pos, c.e_neg, "vs computed 8 8 8 8")

# Neither reading of the helm-dumbbell construction is cordial.
for variant in ("literal", "endpoints-positive"):
    for k in (2, 5):
        print(f"helm-dumbbell k={k} {variant:>18}:",
              helm_dumbbell_scheme(k, variant).report.summary())
