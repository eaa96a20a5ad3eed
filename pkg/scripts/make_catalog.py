"""Regenerate ``src/ternlat/data/catalog.json``.

Stated values are typed in below.  The derived pass builds every entry and
freezes rank, determinants, integrality and, up to rank 24 (32 for
unimodular entries), the minimum, center density and kissing number.

    python3 scripts/make_catalog.py
"""

import json
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "ternlat" / "data" / "catalog.json"
E = []


def add(name, builder, dim, ref, params=None, aliases=(), scale="1", **exp):
    E.append({"name": name, "aliases": list(aliases), "builder": builder, "params": params or {}, "dim": dim,
              "ref": ref, "report_scale": scale,
              "expected": {k: {"value": v, "source": "stated"} for k, v in exp.items()}})


def T(*pairs):
    return [[str(a), b] for a, b in pairs]


add("e8","e8",8,"E8 from an [8,2,6] code over a rank-4 root sublattice",scale="1/9",
    min_norm=36, center_density_squared="1/256", kissing=240)
add("t10","t10",10,"laminated lattice of dimension 10 from the [8,2,6] code",aliases=["lambda10"],
    min_norm=36, center_density_squared="1/768", kissing=336, second_layer=768)
add("k9","k9",9,"Kappa lattice K9 by equating two columns of T10",params={"columns":[0,8]},
    center_density_squared="1/768", kissing=198)
add("k10","k10",10,"Kappa lattice K10 from a [6,1,6] code",params={"code":"c6_kappa10","label":"k10"},
    center_density_squared="1/972", kissing=276)
add("k10_martinet","k10",10,"Martinet lattice from the all-ones [6,1,6] code",params={"code":"c6_martinet","label":"k10_martinet"},
    center_density_squared="1/972", kissing=270)
add("lambda11max","lambda11max",11,"T10 plus one glue vector with a weight-6 column",
    center_density_squared="1/1024", kissing=438)
add("k12_codes","k12_codes",12,"Coxeter-Todd lattice from the [9,3,6] code",
    det_gram=str(3**30), min_norm=36, center_density_squared="1/729", kissing=756)
add("k12_glue","k12_glue",12,"Coxeter-Todd lattice from K10 and two glue vectors with a weight-9/2 column",
    det_gram=str(3**30), min_norm=36, center_density_squared="1/729", kissing=756)
add("t16","t16",16,"Barnes-Wall lattice from two tetracodes and sixteen translates",aliases=["lambda16"],scale="2/9",
    det_gram=f"{3**32}/256", min_norm=18)
add("lambda15","section",15,"section of T16 orthogonal to a minimal vector of the dual lattice",params={"of":"t16","label":"lambda15"},scale="2/9")
add("t24_prime","t24_prime",24,"T(C) from D12 and the ternary Golay code",
    det_gram=str(3**48*16), min_norm=36)
add("t24","leech",24,"Leech lattice as four translates of T24'",aliases=["leech","lambda24"],scale="1/9",
    det_gram=str(3**48), min_norm=36, center_density_squared="1", det_scaled=1, even=True, unimodular=True)
add("lambda23","section",23,"section of T24 orthogonal to a minimal vector",params={"of":"t24","label":"lambda23"},scale="1/9")
add("t22","t22",22,"laminated lattice of dimension 22 from a [12,5,6] code",aliases=["lambda22"],scale="1/9",
    det_gram=str(4*3**45), min_norm=36, det_scaled=12, integral=True, even=True, kissing=49896)
add("t26","t26",26,"laminated lattice of dimension 26 from the Golay code plus a zero column",aliases=["lambda26"],scale="1/9",
    det_gram=str(3**53), min_norm=36, det_scaled=3, integral=True, even=True, kissing=196848)
add("w12","w12",12,"T(C) from a rank-6 lattice and the [8,2,6] code",
    det_gram=str(3**26*256), min_norm=36, center_density_squared="1/2304", kissing=432)
add("t14","t14",14,"laminated lattice of dimension 14 from W12 and two glue vectors",aliases=["lambda14"],
    center_density_squared="1/768")
add("s14","s14",14,"fourteen-dimensional lattice from an [8,3,3] code and sixteen translates",scale="2/9",
    det_gram=f"{3**29}/64", min_norm=18, center_density_squared="1/768")
add("lambda13","lambda13",13,"W12 plus one glue vector with a weight-3 column",
    center_density_squared="1/1536", kissing=726)
c10="golay_shortened_10"; c11="golay_shortened_11"
add("t18_1","root_a",18,"T(C) from A9 and the [10,4,6] shortened Golay code",params={"code":c10,"label":"t18_1"},
    center_density_squared="1/300", kissing=5796)
add("t18_2","dual_forms",18,"T(C) from disjoint weight-5 and weight-6 dual words of the [11,5,6] code",
    params={"code":c11,"label":"t18_2","forms":[[0,0,0,0,1,0,2,2,2,1,0],[1,2,2,1,0,1,0,0,0,0,2]]},
    center_density_squared="1/300", kissing=5712)
add("t20","root_a",20,"T(C) from A10 and the [11,5,6] shortened Golay code",params={"code":c11,"label":"t20"},
    center_density_squared="1/121")
add("k14_2","dual_forms",14,"Kappa lattice K14,2 from the [9,3,6] code and two dual words",
    params={"code":"c9_3_6","label":"k14_2","forms":[[0,0,0,0,0,0,1,1,1],[1,1,1,2,2,2,0,0,0]]},scale="1/9",
    center_density_squared="1/972", kissing=1248, theta=T((4,1248),(6,11808),(8,73062)))
add("k14_2_printed","printed",14,"K14,2 from its listed basis",params={"basis":"k14_2"},scale="1/9",
    center_density_squared="1/972", kissing=1248,
    theta=T((4,1248),(6,11808),(8,73062),(10,263520),(12,811032),(14,2019168),(16,4542864),(18,8999136),(20,17694288)))
add("k14_2_sub13","printed",13,"13-dimensional sublattice of K14,2 from its listed basis",params={"basis":"k14_2_sub13"},
    center_density_squared="1/1296", kissing=780, theta=T((36,780),(54,5784),(72,32022),(90,100264)))
add("k14_2_sub12","printed",12,"12-dimensional sublattice of K14,2 from its listed basis",params={"basis":"k14_2_sub12"},
    center_density_squared="1/1296", kissing=552,
    theta=T((36,552),(54,3048),(72,15858),(90,41544),(108,116436),(126,228312),(144,491376),(162,787200),(180,1527300),(198,2122128)))
add("s12","dual_forms",12,"T(C) from the [8,2,6] code over a determinant-12 sublattice",
    params={"code":"c8_2_6","label":"s12","forms":[[1,1,1,1,1,1,0,0],[0,0,0,0,0,0,1,1]]},
    center_density_squared="1/1296", kissing=456)
add("s11","equate",11,"S12 with two columns equated",params={"of":"s12","columns":[6,14],"label":"s11"},
    center_density_squared="1/1296")
add("s16","dual_forms",16,"T(C) from disjoint weight-4 and weight-6 dual words of the [10,4,6] code",
    params={"code":c10,"label":"s16","forms":[[0,0,0,0,1,1,1,0,1,0],[1,1,1,1,0,0,0,1,0,1]]},
    center_density_squared="1/576", kissing=2664)
add("s15","equate",15,"S16 with two columns equated",params={"of":"s16","columns":[4,14],"label":"s15"},
    center_density_squared="1/864")
H10=T((4,276),(6,768),(8,4020),(10,6144),(12,20416),(14,23040),(16,65844),(18,61440),(20,160488),(22,140544),
      (24,327616),(26,276480),(28,612480),(30,480768),(32,1047348),(34,798720),(36,1665876),(38,1251072),(40,2565672))
add("h10","h10",10,"Construction A on a binary [10,5,4] code, scaled by 3",params={"code":"bin10_5_4"},scale="1/9",
    center_density_squared="1/1024", kissing=276, theta=H10)
add("h10_printed","printed",10,"H10 from its listed basis",params={"basis":"h10"},scale="1/9",
    center_density_squared="1/1024", kissing=276, theta=H10)
add("l10_hamming","l10",10,"ten-dimensional lattice from the tetracode in a 54-dimensional frame",
    min_norm=12, center_density_squared="27/25600", kissing=272)
def kap(n,k): return str(3**(3*n-2*k+2))
add("l12_kappa","kappa",12,"Kappa family, n = 6, all-ones code",params={"code":"c6_martinet","label":"l12_kappa"},
    det_gram=kap(6,1), min_norm=12, center_density_squared="1/729", kissing=756)
add("l18_kappa","kappa",18,"Kappa family, n = 9, [9,3,6] code",params={"code":"c9_3_6","label":"l18_kappa"},
    det_gram=kap(9,3), min_norm=12, center_density_squared="1/243", kissing=6480)
add("l20_kappa","kappa",20,"Kappa family, n = 10, [10,4,6] code",params={"code":c10,"label":"l20_kappa"},
    det_gram=kap(10,4), min_norm=12, center_density_squared="1/81", kissing=15390)
add("l22_kappa","kappa",22,"Kappa family, n = 11, [11,5,6] code",params={"code":c11,"label":"l22_kappa"},
    det_gram=kap(11,5), min_norm=12, center_density_squared="1/27", kissing=33066)
add("t32_v1","t32_v1",32,"first 32-dimensional lattice: four tetracodes, binary codes C1 and C2",scale="2/9",
    min_norm=18, center_density_squared="1", det_scaled=1, integral=True, even=True, unimodular=True, kissing=146880)
add("t32_v1_alt","t32_v1",32,"first 32-dimensional lattice with the [16,8,4] code on both sides",
    params={"binary_12":"bin16_8_4","binary_23":"bin16_8_4","label":"t32_v1_alt"},scale="2/9",
    min_norm=18, center_density_squared="1", det_scaled=1, integral=True, unimodular=True, kissing=146880)
add("t32_v2","t32_d16",32,"second 32-dimensional lattice: D16 and the [16,8,6] code, x = (3/2,...)",
    params={"x":["3/2"]*16,"label":"t32_v2"},scale="1/9",
    det_gram=str(3**64), min_norm=36, det_scaled=1, integral=True, even=True, unimodular=True)
add("t32_v3","t32_d16",32,"third 32-dimensional lattice: x = (-3/2, 3/2, ...)",
    params={"x":["-3/2"]+["3/2"]*15,"label":"t32_v3"},scale="1/9",
    min_norm=36, det_scaled=1, integral=True, even=True, unimodular=True, distinct_from="t32_v2")
add("t32_v4","t32_d16",32,"fourth 32-dimensional lattice: x with eight zero entries",
    params={"x":["3/2"]*8+["0"]*8,"label":"t32_v4"},scale="1/9",
    min_norm=36, integral=True, even=True)
add("t40","t40",40,"extremal 40-dimensional lattice from a self-dual [20,10,6] code",scale="1/9",
    min_norm=36, det_scaled=1, integral=True, even=True, unimodular=True, kissing=39600)
add("t48","t48",48,"48-dimensional lattice from Golay codes and a duum arrangement",scale="2/9",
    min_norm=27, det_scaled=1, integral=True, even=True, unimodular=True)

def D(v):
    return {"value": v, "source": "derived"}

def derive():
    import time
    from fractions import Fraction as F
    from ternlat import catalog
    from ternlat.lattice import gram, det_gram, is_even_integral, is_unimodular, center_density_squared
    from ternlat.enumeration import Enumerator
    for e in E:
        t=time.time()
        try:
            b=catalog.BUILDERS[e["builder"]](dict(e["params"]))
        except catalog.MissingCodeData:
            print(e["name"],"missing code",flush=True); continue
        l=b.lattice; s=F(e["report_scale"]); x=e["expected"]
        x.setdefault("rank",D(l.rank))
        d=det_gram(l)
        x.setdefault("det_gram",D(str(d)))
        x.setdefault("det_scaled",D(str(d*s**l.rank)))
        ie,ev=is_even_integral(l,s)
        x.setdefault("integral",D(ie)); x.setdefault("even",D(ev))
        if is_unimodular(l,s): x.setdefault("unimodular",D(True))
        if e["name"]=="e8": x["unimodular_at"]=D("1/18")
        if l.rank<=24 or (l.rank<=32 and x.get("unimodular",{}).get("value")):
            en=Enumerator(gram(l)); mn=en.min_norm()
            x.setdefault("min_norm",D(str(mn)))
            x.setdefault("center_density_squared",D(str(center_density_squared(l,mn,d))))
            x.setdefault("kissing",D(en.histogram(mn)[mn]))
            if e["name"]=="e8": x["theta"]=D(T(*sorted((k*s,v) for k,v in en.histogram(8/s).items())))
            if e["name"]=="t16": x["theta"]=D(T(*sorted((k*s,v) for k,v in en.histogram(8/s).items())))
        print(e["name"],round(time.time()-t,1),{k:v["value"] for k,v in x.items() if k!="theta"},flush=True)

if __name__=="__main__":
    derive()
    order=["rank","det_gram","det_scaled","integral","even","unimodular","unimodular_at","min_norm",
           "center_density_squared","kissing","theta","second_layer","distinct_from"]
    for e in E:
        e["expected"]={k:e["expected"][k] for k in order if k in e["expected"]}
    json.dump({"entries":E},open(OUT,'w'),indent=1)
    print(len(E))
