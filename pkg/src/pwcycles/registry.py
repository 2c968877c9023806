"""The ten published center/saddle examples, stored verbatim.

Each entry keeps the printed vector fields and first integrals as expression
strings; :func:`load` parses them exactly and rejects any pair whose field is
not Hamiltonian for its first integral.  Expected crossing pairs are printed
to six significant figures (truncated), so they are compared at 1e-4.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ConfigError
from .families import PiecewiseSystem


@dataclass(frozen=True)
class ExampleEntry:
    id: str
    center_field: tuple[str, str]
    center_H: str
    saddle_field: tuple[str, str]
    saddle_H: str
    expected: tuple[tuple[float, float], ...]
    zoom_panel: bool = False

    def system(self) -> PiecewiseSystem:
        return _system(self.id)


EXAMPLES: dict[str, ExampleEntry] = {}


def _add(entry: ExampleEntry) -> None:
    EXAMPLES[entry.id] = entry


_add(ExampleEntry(
    id="N1",
    center_field=(
        "-6/5 - 2/5*(x - y/5) + 49/50*y",
        "-2*(x - y/5)",
    ),
    center_H="(x - y/5)**2 - 6*y/5 + 49*y**2/100",
    saddle_field=(
        "(1/800)*(-3892 - 125*x**3 + 300*x**2*(-2+y) + 4148*y + 64*(-6+y)*y**2 - 15*x*(207 + 16*(-4+y)*y))",
        "(1/640)*(-125*x**3 + 300*x**2*(-2+y) - 3*x*(683 + 80*(-4+y)*y) + 4*(-557 + y*(621 + 16*(-6+y)*y)))",
    ),
    saddle_H="-2/5*(3/10 + x/5 - 4*y/5)**2 - (3/10 + x/5 - 4*y/5)*(4/5 + x/2 - 2*y/5) - 5/8*(4/5 + x/2 - 2*y/5)**2 - 1/4*(4/5 + x/2 - 2*y/5)**4",
    expected=(
        (0.387552, 2.38307),
        (1.13899, 3.06322),
        (6.15242, 9.65856),
        (14.4234, 20.9765),
    ),
))

_add(ExampleEntry(
    id="N2",
    center_field=(
        "-13/50 - 3/50*(x + 3/100*y) - 9801/5000*y",
        "2/25 + 2*(x + 3/100*y)",
    ),
    center_H="-(x + 3/100*y)**2 - 2*(x/25 + 13/100*y) - 9801/10000*y**2",
    saddle_field=(
        "(1/119910000)*(-1072596688 + 2477433732*x + 84672*x**2*(-21011 + 4380*x) + 4*(818403452 + 4473*x*(-267317 + 85128*x))*y + 317583*(-10020 + 6523*x)*y**2 + 932000244*y**3)",
        "(1/39970000)*(275724936 - 48*x*(12792695 + 2016*x*(-4521 + 928*x)) - 4*(206452811 + 14112*x*(-21011 + 6570*x))*y + 2982*(267317 - 170256*x)*y**2 - 230177101*y**3)",
    ),
    saddle_H="7/50*(27/50 - 87/100*x - 93/100*y)**2 + 2/25*(27/50 - 87/100*x - 93/100*y)*(47/50 - 12/25*x - 71/100*y) + 2/175*(47/50 - 12/25*x - 71/100*y)**2 - (27/50 - 87/100*x - 93/100*y)*(47/50 - 12/25*x - 71/100*y)**3",
    expected=(
        (0.355545, 0.286309),
        (0.525244, 0.451964),
        (1.36335, 1.28996),
        (1.89636, 1.82657),
    ),
))

_add(ExampleEntry(
    id="N31",
    center_field=(
        "1/5 + 77/50*(x + 77/100*y) + 8/25*y",
        "-31/25 - 2*(x + 77/100*y)",
    ),
    center_H="2*(31/50*x + 1/10*y) + (x + 77/100*y)**2 + 4/25*y**2",
    saddle_field=(
        "(1/4130000)*(-405967 + 5474739*y + 9*(778786*x + 13*x**2*(-146848 + 73877*x) + 4*x*(-728887 + 615690*x)*y + 57*(-16337 + 31442*x)*y**2 + 357029*y**3))",
        "(1/12390000)*(-27263925*x**3 + 1053*(55627 - 73877*y)*x**2 - 24*x*(716899 + 9*y*(-477256 + 307845*y)) - 2*(862465 + 27*y*(389393 + y*(-728887 + 298699*y))))",
    ),
    saddle_H="73/200*(43/100 - 24/25*x - 9/20*y)**2 - 3/2*(43/100 - 24/25*x - 9/20*y)**2*(-39/100 + 39/100*x + 57/100*y)**2 + 1/4*(-39/100 + 39/100*x + 57/100*y)**4",
    expected=(
        (0.190098, 0.482586),
        (0.325214, 0.700087),
        (0.439849, 0.86669),
        (4.94215, 6.23885),
    ),
    zoom_panel=True,
))

_add(ExampleEntry(
    id="N32",
    center_field=(
        "3/5 + x + 37/25*y",
        "4/5 - 2*(x + y/2)",
    ),
    center_H="2*(-2/5*x + 3/10*y) + (x + y/2)**2 + 49/100*y**2",
    saddle_field=(
        "(1/1500)*(-22688 + 55*x**3 + 6*x**2*(307 - 50*y) - 24*x*(-615 + 2*y*(13 + 5*y)) + y*(31560 + y*(-6618 + 485*y)))",
        "(1/1500)*(-215*x**3 - 3*x**2*(676 + 55*y) + 12*x*(-510 + y*(-307 + 25*y)) + 8*(1564 + y*(-1845 + y*(39 + 10*y))))",
    ),
    saddle_H="-8/15*(1 - 3/5*x - 9/10*y)**2 - 4/5*(1 - 3/5*x - 9/10*y)*(-4/5 - x/10 + y/10) - 3/10*(-4/5 - x/10 + y/10)**2 - 3/2*(1 - 3/5*x - 9/10*y)**2*(-4/5 - x/10 + y/10)**2 + 1/4*(-4/5 - x/10 + y/10)**4",
    expected=(
        (1.60038, 0.971298),
        (1.72908, 1.12275),
        (3.35256, 3.01931),
        (22.0218, 24.7284),
    ),
    zoom_panel=True,
))

_add(ExampleEntry(
    id="N41",
    center_field=(
        "7/5 - 8/5*(x - 4/5*y) + 2/25*y",
        "6/5 - 2*(x - 4/5*y)",
    ),
    center_H="(x - 4/5*y)**2 + 2*(-3/5*x + 7/10*y) + 1/25*y**2",
    saddle_field=(
        "(1/2100)*(-8013 + x*(6859 - 2*x*(621 + 80*x)) + 14302*y + 12*x*(-927 + 173*x)*y + 12*(-513 + 233*x)*y**2 + 776*y**3)",
        "(1/4200)*(6927 - 775*x**3 + 30*x**2*(81 + 32*y) + x*(-5798 + 24*(207 - 173*y)*y) - 2*y*(6859 - 5562*y + 932*y**2))",
    ),
    saddle_H="-1/4*(-9/10 + x/2 + y/5)**4 - 1/10*(-3/5 - x/10 + 4/5*y)**2 - 3/2*(-9/10 + x/2 + y/5)**2*(-3/5 - x/10 + 4/5*y)**2",
    expected=(
        (2.02448, 0.845234),
        (2.35986, 1.22555),
        (2.70908, 1.62987),
        (10.1815, 10.6126),
    ),
))

_add(ExampleEntry(
    id="N42",
    center_field=(
        "6/5 - 7/5*(x - 7/10*y) + 8/25*y",
        "2 - 2*(x - 7/10*y)",
    ),
    center_H="(x - 7/10*y)**2 + 2*(-x + 3/5*y) + 4/25*y**2",
    saddle_field=(
        "(1/3200)*(-16108 + x*(28511 + 8*x*(-2127 + 424*x)) + 34726*y + 96*x*(-413 + 124*x)*y + 96*(-229 + 136*x)*y**2 + 5632*y**3)",
        "(1/6400)*(25276 + x*(-45083 + 8*(3351 - 664*x)*x) - 57022*y + 96*(709 - 212*x)*x*y + 96*(413 - 248*x)*y**2 - 8704*y**3)",
    ),
    saddle_H="-1/5*(7/10 - 2/5*x - 4/5*y)**2 - 1/4*(7/10 - 2/5*x - 4/5*y)**4 - 3/10*(7/10 - 2/5*x - 4/5*y)*(-4/5 + x/2 + y/5) - 9/80*(-4/5 + x/2 + y/5)**2 - 3/2*(7/10 - 2/5*x - 4/5*y)**2*(-4/5 + x/2 + y/5)**2",
    expected=(
        (2.55713, 0.821581),
        (2.72657, 1.05173),
        (3.4514, 2.00246),
        (4.00261, 2.70789),
    ),
))

_add(ExampleEntry(
    id="N51",
    center_field=(
        "11/25 - 43/50*(x - 43/100*y) + 1058/625*y",
        "-7/50 - 2*(x - 43/100*y)",
    ),
    center_H="(x - 43/100*y)**2 + 2*(7/100*x + 11/50*y) + 529/625*y**2",
    saddle_field=(
        "(1/140000000)*(-17828080 + 398806366*x**3 + 6*x**2*(-97025863 + 222074762*y) + 2*y*(215022709 + 68*y*(-5722053 + 3962714*y)) + x*(354597367 + 24*y*(-55989761 + 61426967*y)))",
        "(1/280000000)*(38035040 + x*(-590906221 - 918*x*(-1102793 + 776391*x)) - 709194734*y + 12*(194051726 - 199403183*x)*x*y + 24*(55989761 - 111037381*x)*y**2 - 982831472*y**3)",
    ),
    saddle_H="1/4*(-(1/20 + 19/50*x + 13/25*y)**4 + (-7/25 + 59/100*x + 33/50*y)**4) + 13/100*(1/20 + 19/50*x + 13/25*y)**2 + 21/100*(1/20 + 19/50*x + 13/25*y)**2*(-7/25 + 59/100*x + 33/50*y)**2",
    expected=(
        (0.135002, 0.072169),
        (0.385675, 0.278707),
        (1.17787, 1.03194),
        (2.14886, 1.98091),
    ),
))

_add(ExampleEntry(
    id="N52",
    center_field=(
        "6/5 + 2*(x - y) - 2*y",
        "8/5 + 2*(x - y)",
    ),
    center_H="-(x - y)**2 - 2*(4/5*x - 3/5*y) - y**2",
    saddle_field=(
        "(1/1500)*(-9995 + 5*x*(4661 + 9*x*(-352 + 17*x)) + 3*(5816 + 9*(-864 + x)*x)*y - 81*(106 + 17*x)*y**2 - 729*y**3)",
        "(1/9000)*(90395 + 5*x*(-38291 + 6*(4323 - 388*x)*x) - 30*(4661 + 9*x*(-704 + 51*x))*y - 162*(-432 + x)*y**2 + 2754*y**3)",
    ),
    saddle_H="1/4*(-(-1/10 - 7/10*x - 3/5*y)**4 + (1 - x/2 - 3/10*y)**4) + 5/16*(-1/10 - 7/10*x - 3/5*y)**2 + 1/2*(-1/10 - 7/10*x - 3/5*y)*(1 - x/2 - 3/10*y) + 1/5*(1 - x/2 - 3/10*y)**2 + 3/5*(-1/10 - 7/10*x - 3/5*y)**2*(1 - x/2 - 3/10*y)**2",
    expected=(
        (0.52839, 1.10766),
        (1.00057, 1.47942),
        (1.72915, 2.02288),
        (7.95553, 6.47249),
    ),
))

_add(ExampleEntry(
    id="N61",
    center_field=(
        "6/5 + 18/25*y + 2*(x + y)",
        "1 - 2*(x + y)",
    ),
    center_H="2*(-x/2 + 3/5*y) + 9/25*y**2 + (x + y)**2",
    saddle_field=(
        "(1/21000)*(-218240 + 36*x*(9544 - 5082*x + 993*x**2) + 393744*y + 9*x*(-45808 + 13989*x)*y + 3*(-77840 + 51789*x)*y**2 + 69994*y**3)",
        "(1/7000)*(63232 - 6*x*(16832 + 9*x*(-1008 + 193*x)) - 12*(9544 + 3*x*(-3388 + 993*x))*y + 3*(22904 - 13989*x)*y**2 - 17263*y**3)",
    ),
    saddle_H="1/4*(-(-4/5 + 3/10*x + 1/10*y)**4 - (-4/5 + 3/5*x + 9/10*y)**4) - 1/5*(-4/5 + 3/5*x + 9/10*y)**2 - 27/20*(-4/5 + 3/10*x + 1/10*y)**2*(-4/5 + 3/5*x + 9/10*y)**2",
    expected=(
        (2.11393, 0.946661),
        (2.57797, 1.3437),
        (3.8652, 2.44633),
        (11.5231, 9.01165),
    ),
))

_add(ExampleEntry(
    id="N62",
    center_field=(
        "87/50 - 29/25*(x - 29/50*y) + 9/1250*y",
        "37/50 - 2*(x - 29/50*y)",
    ),
    center_H="(x - 29/50*y)**2 + 2*(-37/100*x + 87/100*y) + 9/2500*y**2",
    saddle_field=(
        "(1/11958250000)*(898774048 - 5365417169*x - 6417*x**2*(-421623 + 62735*x) + 3915993356*y + 1302*(3990158 - 2625497*x)*x*y + 1116*(-5047468 + 987185*x)*y**2 + 3286262384*y**3)",
        "(1/23916500000)*(x*(-18163986613 + 31*(678017913 - 261411193*x)*x) + 38502*x*(-281082 + 62735*x)*y + 2604*(-1995079 + 2625497*x)*y**2 - 734465640*y**3 + 7*(532650799 + 1532976334*y))",
    ),
    saddle_H="1/4*(-(29/100 - x/25 - 27/50*y)**4 - (-51/100 + 57/100*x - 1/50*y)**4) - 31/200*(29/100 - x/25 - 27/50*y)**2 - 4/25*(29/100 - x/25 - 27/50*y)*(-51/100 + 57/100*x - 1/50*y) - 32/775*(-51/100 + 57/100*x - 1/50*y)**2 + 12/25*(29/100 - x/25 - 27/50*y)**2*(-51/100 + 57/100*x - 1/50*y)**2",
    expected=(
        (0.765476, 0.0111834),
        (1.07893, 0.202174),
        (1.84751, 0.985982),
        (3.25582, 2.97642),
    ),
    zoom_panel=True,
))


def ids() -> list[str]:
    return list(EXAMPLES)


def get(example_id: str) -> ExampleEntry:
    key = str(example_id).strip().upper().replace("_", "").replace("^", "")
    try:
        return EXAMPLES[key]
    except KeyError:
        raise ConfigError(f"unknown example {example_id!r}; known: {', '.join(EXAMPLES)}") from None


@lru_cache(maxsize=None)
def _system(example_id: str) -> PiecewiseSystem:
    e = EXAMPLES[example_id]
    return PiecewiseSystem.explicit(e.center_field, e.center_H, e.saddle_field, e.saddle_H,
                                    family=e.id, name=e.id)


def load(example_id: str) -> PiecewiseSystem:
    """Parsed system for ``example_id``; raises on a non-Hamiltonian transcription."""
    return _system(get(example_id).id)
