"""Source tables for the web catalog: 34 webs on H^3, 34 on dS_3, 9 on H^2.

Charts are transcribed from the source tables verbatim; where a printed chart
fails the hyperquadric/metric identities, the corrected expression is stored
under "map"/"metric" and the printed one under "map_raw"/"metric_raw" with an
"erratum" note (the verification engine demonstrates the failure/repair pair).

Block spec: (k, eps, lam_src) for J_{eps k}(lam), ("complex", re, im) for a
conjugate pair. Eigenvalue sources may reference the chart parameters; for
the elliptic-modulus webs the form eigenvalue is the squared chart modulus.
"""

# ---------------------------------------------------------------------------
# warped-product expectations per reducible case: one entry per eigenvector
# choice (ascending eigenvalue order), with the factor types of the restricted
# decomposition (geodesic factor first) and the image predicate of psi
# (including the connectedness clauses for H^n and dS_1 factors).

WP_CASES = {
    ("H3", "4.1"): [
        {"choices": ["spacelike"], "factors": ["H1", "S2"], "image": "x^2+y^2+z^2 > 0"}
    ],
    ("dS3", "4.1"): [
        {"choices": ["spacelike"], "factors": ["dS1", "S2"], "image": "x^2+y^2+z^2 > 0"}
    ],
    ("H3", "4.2"): [
        {
            "choices": ["timelike"],
            "factors": ["H1", "H2"],
            "image": "-t^2+x^2+y^2 < 0 and t > 0",
        }
    ],
    ("dS3", "4.2"): [
        {
            "choices": ["timelike"],
            "factors": ["dS1", "H2"],
            "image": "-t^2+x^2+y^2 < 0 and t > 0",
        },
        {
            "choices": ["spacelike"],
            "factors": ["S1", "dS2"],
            "image": "-t^2+x^2+y^2 > 0",
        },
    ],
    ("H3", "4.3"): [
        {
            "choices": ["timelike", "spacelike"],
            "factors": ["H1", "H1", "S1"],
            "image": "-t^2+x^2 < 0 and t > 0 and y^2+z^2 > 0",
        }
    ],
    ("dS3", "4.3"): [
        {
            "choices": ["timelike", "spacelike"],
            "factors": ["dS1", "H1", "S1"],
            "image": "-t^2+x^2 < 0 and t > 0 and y^2+z^2 > 0",
        },
        {
            "choices": ["spacelike", "spacelike"],
            "factors": ["S1", "dS1", "S1"],
            "image": "-t^2+x^2 > 0 and x > 0 and y^2+z^2 > 0",
        },
    ],
    ("H3", "4.4"): [
        {
            "choices": ["timelike"],
            "factors": ["H2", "H1"],
            "image": "-t^2+x^2 < 0 and t > 0",
        }
    ],
    ("dS3", "4.4"): [
        {
            "choices": ["timelike"],
            "factors": ["dS2", "H1"],
            "image": "-t^2+x^2 < 0 and t > 0",
        },
        {
            "choices": ["spacelike"],
            "factors": ["S2", "dS1"],
            "image": "-t^2+x^2 > 0 and x > 0",
        },
    ],
    ("H3", "4.6"): [
        {"choices": ["spacelike"], "factors": ["H2", "S1"], "image": "y^2+z^2 > 0"}
    ],
    ("dS3", "4.6"): [
        {"choices": ["spacelike"], "factors": ["dS2", "S1"], "image": "y^2+z^2 > 0"}
    ],
    ("H3", "4.13"): [
        {"choices": [], "factors": ["H1", "E2 (parabolic)"], "image": "t+x > 0"}
    ],
    ("dS3", "4.13"): [
        {"choices": [], "factors": ["dS1", "E2 (parabolic)"], "image": "t+x > 0"}
    ],
    ("H3", "4.14"): [
        {"choices": [], "factors": ["H2", "E1 (parabolic)"], "image": "t+x > 0"}
    ],
    ("dS3", "4.14"): [
        {"choices": [], "factors": ["dS2", "E1 (parabolic)"], "image": "t+x > 0"}
    ],
    ("H3", "4.21"): [
        {"choices": [], "factors": ["H2", "E1 (parabolic)"], "image": "t+x > 0"}
    ],
    ("dS3", "4.21"): [
        {"choices": [], "factors": ["dS2", "E1 (parabolic)"], "image": "t+x > 0"}
    ],
}
# the paper's own cartesian axis assignment for each reducible case's tensor
WP_TENSORS = {
    "4.1": {"diag": [("t", "1")]},
    "4.2": {"diag": [("z", "1")]},
    "4.3": {"diag": [("y", "1"), ("z", "1")]},
    "4.4": {"diag": [("y", "a^2"), ("z", "1")]},
    "4.5": {"diag": [("y", "-(a^2/(1-a^2))"), ("z", "1")]},
    "4.6": {"diag": [("t", "1"), ("x", "a^2")]},
    "4.7": {"diag": [("t", "a^2"), ("x", "1")]},
    "4.8": {"diag": [("t", "1"), ("x", "-(a^2/(1-a^2))")]},
    "4.9": {"complex_pair": ("0", "1")},
    "4.13": {"k": 2},
    "4.14": {"k": 2, "diag": [("z", "1")]},
    "4.15": {"k": 2, "diag": [("z", "-1")]},
    "4.16": {"k": 2, "diag": [("y", "1"), ("z", "1")]},
    "4.17": {"k": 2, "diag": [("y", "-1"), ("z", "-1")]},
    "4.21": {"k": 3},
}

# cases 4.5, 4.7-4.9, 4.15-4.17 reuse the warped product of their lead case
for _space in ("H3", "dS3"):
    WP_CASES[(_space, "4.5")] = WP_CASES[(_space, "4.4")]
    for _sec in ("4.7", "4.8", "4.9", "4.16", "4.17"):
        WP_CASES[(_space, _sec)] = WP_CASES[(_space, "4.6")]
    WP_CASES[(_space, "4.15")] = WP_CASES[(_space, "4.14")]


FORM_41 = [(1, -1, "1"), (1, 1, "0"), (1, 1, "0"), (1, 1, "0")]
FORM_42 = [(1, -1, "0"), (1, 1, "0"), (1, 1, "0"), (1, 1, "1")]

H3_WEBS = [
    {
        "id": "H-1",
        "name": "Spacelike rotational web I",
        "section": "4.1",
        "form": FORM_41,
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [("u", "0", "inf"), ("v", "0", "pi"), ("w", "0", "2*pi")],
                "region": "t > 0",
                "map": [
                    ("t", "cosh(u)"),
                    ("x", "sinh(u)*cos(v)"),
                    ("y", "sinh(u)*sin(v)*sin(w)"),
                    ("z", "sinh(u)*sin(v)*cos(w)"),
                ],
                "metric": ("1", "sinh(u)^2", "sinh(u)^2*sin(v)^2"),
            }
        ],
    },
    {
        "id": "H-2",
        "name": "Hyperbolic-elliptic web I",
        "section": "4.1",
        "form": FORM_41,
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "charts": [
            {
                "ranges": [
                    ("u", "0", "inf"),
                    ("v", "0", "4*K(a)"),
                    ("w", "-2*K(b)", "2*K(b)"),
                ],
                "region": "t > 0",
                "map": [
                    ("t", "cosh(u)"),
                    ("x", "sinh(u)*sn(v;a)*dn(w;b)"),
                    ("y", "sinh(u)*cn(v;a)*cn(w;b)"),
                    ("z", "sinh(u)*dn(v;a)*sn(w;b)"),
                ],
                "metric": (
                    "1",
                    "sinh(u)^2*(a^2*cn(v;a)^2 + b^2*cn(w;b)^2)",
                    "sinh(u)^2*(a^2*cn(v;a)^2 + b^2*cn(w;b)^2)",
                ),
            }
        ],
    },
    {
        "id": "H-3",
        "name": "Hyperbolic-elliptic web II",
        "section": "4.2",
        "form": FORM_42,
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "charts": [
            {
                "ranges": [
                    ("u", "-inf", "inf"),
                    ("v", "0", "K(a)"),
                    ("w", "0", "K(b)"),
                ],
                "region": "-t^2+x^2+y^2 < 0 and t > 0",
                "map": [
                    ("t", "cosh(u)*nd(v;a)*ns(w;b)"),
                    ("x", "cosh(u)*sd(v;a)*ds(w;b)"),
                    ("y", "cosh(u)*cd(v;a)*cs(w;b)"),
                    ("z", "sinh(u)"),
                ],
                "metric": (
                    "1",
                    "cosh(u)^2*(a^2*cd(v;a)^2 + cs(w;b)^2)",
                    "cosh(u)^2*(a^2*cd(v;a)^2 + cs(w;b)^2)",
                ),
            }
        ],
    },
    {
        "id": "H-4",
        "name": "Hyperbolic-elliptic web III",
        "section": "4.2",
        "form": FORM_42,
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "charts": [
            {
                "ranges": [
                    ("u", "-inf", "inf"),
                    ("v", "0", "K(a)"),
                    ("w", "0", "K(b)"),
                ],
                "region": "-t^2+x^2+y^2 < 0 and t > 0",
                "map": [
                    ("t", "cosh(u)*nc(v;a)*nc(w;b)"),
                    ("x", "cosh(u)*sac(v;a)*dc(w;b)"),
                    ("y", "cosh(u)*dc(v;a)*sac(w;b)"),
                    ("z", "sinh(u)"),
                ],
                "metric": (
                    "1",
                    "cosh(u)^2*(dc(v;a)^2 + a^2*sac(w;b)^2)",
                    "cosh(u)^2*(dc(v;a)^2 + a^2*sac(w;b)^2)",
                ),
            }
        ],
    },
    {
        "id": "H-5",
        "name": "Spacelike rotational web II",
        "section": "4.2",
        "form": FORM_42,
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [("u", "-inf", "inf"), ("v", "0", "inf"), ("w", "0", "2*pi")],
                "region": "-t^2+x^2+y^2 < 0 and t > 0",
                "map": [
                    ("t", "cosh(u)*cosh(v)"),
                    ("x", "cosh(u)*sinh(v)*cos(w)"),
                    ("y", "cosh(u)*sinh(v)*sin(w)"),
                    ("z", "sinh(u)"),
                ],
                "metric": ("1", "cosh(u)^2", "cosh(u)^2*sinh(v)^2"),
            }
        ],
    },
    {
        "id": "H-6",
        "name": "Timelike rotational web I",
        "section": "4.2",
        "form": FORM_42,
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [
                    ("u", "-inf", "inf"),
                    ("v", "-inf", "inf"),
                    ("w", "-inf", "inf"),
                ],
                "region": "-t^2+x^2+y^2 < 0 and t > 0",
                "map": [
                    ("t", "cosh(u)*cosh(v)*cosh(w)"),
                    ("x", "cosh(u)*cosh(v)*sinh(w)"),
                    ("y", "cosh(u)*sinh(v)"),
                    ("z", "sinh(u)"),
                ],
                "metric": ("1", "cosh(u)^2", "cosh(u)^2*cosh(v)^2"),
            }
        ],
    },
    {
        "id": "H-7",
        "name": "Hyperbolic-complex elliptic web",
        "section": "4.2",
        "form": FORM_42,
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "charts": [
            {
                "ranges": [
                    ("u", "-inf", "inf"),
                    ("v", "0", "K(a)"),
                    ("w", "0", "K(b)"),
                ],
                "region": "-t^2+x^2+y^2 < 0 and t > 0 and x > 0",
                "branch_note": "t, x >= 0 sheet; others via t -> -t, x -> -x",
                "map": [
                    (
                        "t^2+x^2",
                        "2*cosh(u)^2*dn(2*v;a)*dn(2*w;b)/(a*b*(1+cn(2*v;a))*(1+cn(2*w;b)))",
                    ),
                    (
                        "t^2-x^2",
                        "2*cosh(u)^2*(1+cn(2*v;a)*cn(2*w;b))/((1+cn(2*v;a))*(1+cn(2*w;b)))",
                    ),
                    ("y", "cosh(u)*sn(v;a)*dc(v;a)*sn(w;b)*dc(w;b)"),
                    ("z", "sinh(u)"),
                ],
                "metric": (
                    "1",
                    "cosh(u)^2*(sn(v;a)^2*dc(v;a)^2 + sn(w;b)^2*dc(w;b)^2)",
                    "cosh(u)^2*(sn(v;a)^2*dc(v;a)^2 + sn(w;b)^2*dc(w;b)^2)",
                ),
            }
        ],
    },
    {
        "id": "H-8",
        "name": "Hyperbolic-null elliptic web I",
        "section": "4.2",
        "form": FORM_42,
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [
                    ("u", "-inf", "inf"),
                    ("v", "0", "pi/2"),
                    ("w", "0", "inf"),
                ],
                "region": "-t^2+x^2+y^2 < 0 and t > 0",
                "map": [
                    ("t+x", "cosh(u)*sec(v)*sech(w)"),
                    ("t-x", "cosh(u)*cos(v)*cosh(w)*(1 + tan(v)^2*tanh(w)^2)"),
                    ("y", "cosh(u)*tan(v)*tanh(w)"),
                    ("z", "sinh(u)"),
                ],
                "metric": (
                    "1",
                    "cosh(u)^2*(sec(v)^2 - sech(w)^2)",
                    "cosh(u)^2*(sec(v)^2 - sech(w)^2)",
                ),
            }
        ],
    },
    {
        "id": "H-9",
        "name": "Hyperbolic-null elliptic web II",
        "section": "4.2",
        "form": FORM_42,
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [
                    ("u", "-inf", "inf"),
                    ("v", "0", "inf"),
                    ("w", "0", "pi/2"),
                ],
                "region": "-t^2+x^2+y^2 < 0 and t > 0",
                "map": [
                    ("t+x", "cosh(u)*csch(v)*sec(w)"),
                    ("t-x", "cosh(u)*sinh(v)*cos(w)*(1 + coth(v)^2*tan(w)^2)"),
                    ("y", "cosh(u)*coth(v)*tan(w)"),
                    ("z", "sinh(u)"),
                ],
                "metric": (
                    "1",
                    "cosh(u)^2*(csch(v)^2 + sec(w)^2)",
                    "cosh(u)^2*(csch(v)^2 + sec(w)^2)",
                ),
            }
        ],
    },
    {
        "id": "H-10",
        "name": "Null rotational web I",
        "section": "4.2",
        "form": FORM_42,
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [
                    ("u", "-inf", "inf"),
                    ("v", "-inf", "inf"),
                    ("w", "-inf", "inf"),
                ],
                "region": "-t^2+x^2+y^2 < 0 and t > 0",
                "map": [
                    ("t+x", "cosh(u)*exp(v)"),
                    ("t-x", "cosh(u)*(exp(-v) + w^2*exp(v))"),
                    ("y", "cosh(u)*w*exp(v)"),
                    ("z", "sinh(u)"),
                ],
                "metric": ("1", "cosh(u)^2", "cosh(u)^2*exp(2*v)"),
            }
        ],
    },
    {
        "id": "H-11",
        "name": "Hyperbolic-null elliptic web III",
        "section": "4.2",
        "form": FORM_42,
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [("u", "-inf", "inf"), ("v", "0", "inf"), ("w", "0", "inf")],
                "region": "-t^2+x^2+y^2 < 0 and t > 0",
                "map": [
                    ("t+x", "cosh(u)/(v*w)"),
                    ("t-x", "cosh(u)*(v^2 + w^2)^2/(4*v*w)"),
                    ("y", "cosh(u)*(w^2 - v^2)/(2*v*w)"),
                    ("z", "sinh(u)"),
                ],
                "metric": (
                    "1",
                    "cosh(u)^2*(v^-2 + w^-2)",
                    "cosh(u)^2*(v^-2 + w^-2)",
                ),
            }
        ],
    },
    {
        "id": "H-12",
        "name": "Spacelike-timelike rotational web",
        "section": "4.3",
        "form": [(1, -1, "0"), (1, 1, "0"), (1, 1, "1"), (1, 1, "1")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [("u", "0", "inf"), ("v", "-inf", "inf"), ("w", "0", "2*pi")],
                "region": "-t^2+x^2 < 0 and t > 0",
                "map": [
                    ("t", "cosh(u)*cosh(v)"),
                    ("x", "cosh(u)*sinh(v)"),
                    ("y", "sinh(u)*sin(w)"),
                    ("z", "sinh(u)*cos(w)"),
                ],
                "metric": ("1", "cosh(u)^2", "sinh(u)^2"),
            }
        ],
    },
    {
        "id": "H-13",
        "name": "Timelike rotational web II",
        "section": "4.4",
        "form": [(1, -1, "0"), (1, 1, "0"), (1, 1, "a^2"), (1, 1, "1")],
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "charts": [
            {
                "ranges": [
                    ("u", "-inf", "inf"),
                    ("v", "0", "K(a)"),
                    ("w", "0", "K(b)"),
                ],
                "region": "-t^2+x^2 < 0 and t > 0",
                "map": [
                    ("t", "nd(v;a)*ns(w;b)*cosh(u)"),
                    ("x", "nd(v;a)*ns(w;b)*sinh(u)"),
                    ("y", "sd(v;a)*ds(w;b)"),
                    ("z", "cd(v;a)*cs(w;b)"),
                ],
                "metric": (
                    "nd(v;a)^2*ns(w;b)^2",
                    "a^2*cd(v;a)^2 + cs(w;b)^2",
                    "a^2*cd(v;a)^2 + cs(w;b)^2",
                ),
            }
        ],
    },
    {
        "id": "H-14",
        "name": "Timelike rotational web III",
        "section": "4.5",
        "form": [(1, -1, "0"), (1, 1, "0"), (1, 1, "-(a^2/(1-a^2))"), (1, 1, "1")],
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "charts": [
            {
                "ranges": [
                    ("u", "-inf", "inf"),
                    ("v", "0", "K(a)"),
                    ("w", "0", "K(b)"),
                ],
                "region": "-t^2+x^2 < 0 and t > 0",
                "map": [
                    ("t", "nc(v;a)*nc(w;b)*cosh(u)"),
                    ("x", "nc(v;a)*nc(w;b)*sinh(u)"),
                    ("y", "sac(v;a)*dc(w;b)"),
                    ("z", "dc(v;a)*sac(w;b)"),
                ],
                "metric": (
                    "nc(v;a)^2*nc(w;b)^2",
                    "dc(v;a)^2 + a^2*sac(w;b)^2",
                    "dc(v;a)^2 + a^2*sac(w;b)^2",
                ),
            }
        ],
    },
    {
        "id": "H-15",
        "name": "Spacelike rotational web III",
        "section": "4.6",
        "form": [(1, -1, "1"), (1, 1, "a^2"), (1, 1, "0"), (1, 1, "0")],
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "charts": [
            {
                "ranges": [
                    ("u", "0", "2*pi"),
                    ("v", "0", "K(a)"),
                    ("w", "0", "K(b)"),
                ],
                "region": "y^2+z^2 > 0 and t > 0",
                "map": [
                    ("t", "nd(v;a)*ns(w;b)"),
                    ("x", "sd(v;a)*ds(w;b)"),
                    ("y", "cd(v;a)*cs(w;b)*sin(u)"),
                    ("z", "cd(v;a)*cs(w;b)*cos(u)"),
                ],
                "metric": (
                    "cd(v;a)^2*cs(w;b)^2",
                    "a^2*cd(v;a)^2 + cs(w;b)^2",
                    "a^2*cd(v;a)^2 + cs(w;b)^2",
                ),
            }
        ],
    },
    {
        "id": "H-16",
        "name": "Spacelike rotational web IV",
        "section": "4.7",
        "form": [(1, -1, "a^2"), (1, 1, "1"), (1, 1, "0"), (1, 1, "0")],
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "charts": [
            {
                "ranges": [
                    ("u", "0", "2*pi"),
                    ("v", "0", "K(a)"),
                    ("w", "0", "K(b)"),
                ],
                "region": "y^2+z^2 > 0 and t > 0",
                "map": [
                    ("t", "nc(v;a)*nc(w;b)"),
                    ("x", "sac(v;a)*dc(w;b)"),
                    ("y", "dc(v;a)*sac(w;b)*sin(u)"),
                    ("z", "dc(v;a)*sac(w;b)*cos(u)"),
                ],
                "metric": (
                    "dc(v;a)^2*sac(w;b)^2",
                    "dc(v;a)^2 + a^2*sac(w;b)^2",
                    "dc(v;a)^2 + a^2*sac(w;b)^2",
                ),
            }
        ],
    },
    {
        "id": "H-17",
        "name": "Spacelike rotational web V",
        "section": "4.8",
        "form": [(1, -1, "1"), (1, 1, "-(a^2/(1-a^2))"), (1, 1, "0"), (1, 1, "0")],
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "charts": [
            {
                "ranges": [
                    ("u", "0", "2*pi"),
                    ("v", "0", "K(a)"),
                    ("w", "0", "K(b)"),
                ],
                "region": "y^2+z^2 > 0 and t > 0",
                "map": [
                    ("t", "nd(v;a)*ns(w;b)"),
                    ("x", "cd(v;a)*cs(w;b)"),
                    ("y", "sd(v;a)*ds(w;b)*sin(u)"),
                    ("z", "sd(v;a)*ds(w;b)*cos(u)"),
                ],
                "metric": (
                    "sd(v;a)^2*ds(w;b)^2",
                    "a^2*cd(v;a)^2 + cs(w;b)^2",
                    "a^2*cd(v;a)^2 + cs(w;b)^2",
                ),
            }
        ],
    },
    {
        "id": "H-18",
        "name": "Spacelike rotational web VI",
        "section": "4.9",
        "form": [("complex", "0", "1"), (1, 1, "0"), (1, 1, "0")],
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "note": "the free parameter c of this case is normalized away; the chart does not depend on it",
        "charts": [
            {
                "ranges": [
                    ("u", "0", "2*pi"),
                    ("v", "0", "K(a)"),
                    ("w", "0", "K(b)"),
                ],
                "region": "y^2+z^2 > 0 and t > 0 and x > 0",
                "branch_note": "t, x >= 0 sheet; others via t -> -t, x -> -x",
                "map": [
                    (
                        "t^2+x^2",
                        "2*dn(2*v;a)*dn(2*w;b)/(a*b*(1+cn(2*v;a))*(1+cn(2*w;b)))",
                    ),
                    (
                        "t^2-x^2",
                        "2*(1+cn(2*v;a)*cn(2*w;b))/((1+cn(2*v;a))*(1+cn(2*w;b)))",
                    ),
                    ("y", "sn(v;a)*dc(v;a)*sn(w;b)*dc(w;b)*sin(u)"),
                    ("z", "sn(v;a)*dc(v;a)*sn(w;b)*dc(w;b)*cos(u)"),
                ],
                "metric": (
                    "sn(v;a)^2*dc(v;a)^2*sn(w;b)^2*dc(w;b)^2",
                    "sn(v;a)^2*dc(v;a)^2 + sn(w;b)^2*dc(w;b)^2",
                    "sn(v;a)^2*dc(v;a)^2 + sn(w;b)^2*dc(w;b)^2",
                ),
            }
        ],
    },
    {
        "id": "H-19",
        "name": "Real ellipsoidal web I",
        "section": "4.10",
        "form": [(1, -1, "0"), (1, 1, "a"), (1, 1, "b"), (1, 1, "1")],
        "params": {"a": 0.25, "b": 0.5},
        "constraint": "opair",
        "ict": {"k": 0, "diag": [("t", "0", -1), ("x", "a", 1), ("y", "b", 1), ("z", "1", 1)]},
        "charts": [
            {
                "ranges": [("u", "1", "inf"), ("v", "b", "1"), ("w", "a", "b")],
                "region": "t > 0 and x > 0 and y > 0 and z > 0",
                "branch_note": "all-positive octant; other sheets via x^i -> -x^i",
                "ict_chain": "0 < a < w < b < v < 1 < u",
                "map": [
                    ("t^2", "u*v*w/(a*b)"),
                    ("x^2", "(u-a)*(v-a)*(w-a)/(a*(b-a)*(1-a))"),
                    ("y^2", "(u-b)*(v-b)*(b-w)/(b*(b-a)*(1-b))"),
                    ("z^2", "(u-1)*(1-v)*(1-w)/((1-a)*(1-b))"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*u*(u-a)*(u-b)*(u-1))",
                    "(u-v)*(v-w)/(4*v*(v-a)*(v-b)*(1-v))",
                    "(u-w)*(v-w)/(4*w*(w-a)*(b-w)*(1-w))",
                ),
            }
        ],
    },
    {
        "id": "H-20",
        "name": "Real ellipsoidal web II",
        "section": "4.11",
        "form": [(1, -1, "a"), (1, 1, "0"), (1, 1, "b"), (1, 1, "1")],
        "params": {"a": 0.25, "b": 0.5},
        "constraint": "opair",
        "ict": {"k": 0, "diag": [("t", "a", -1), ("x", "0", 1), ("y", "b", 1), ("z", "1", 1)]},
        "charts": [
            {
                "ranges": [("u", "1", "inf"), ("v", "b", "1"), ("w", "-inf", "0")],
                "region": "t > 0 and x > 0 and y > 0 and z > 0",
                "branch_note": "all-positive octant; other sheets via x^i -> -x^i",
                "ict_chain": "w < 0 < a < b < v < 1 < u",
                "erratum": "printed range 0 < w < a and x^2 = uvw/(ab) cannot both hold (the transformation theory gives x^2 = -uvw/(ab), which is negative there); the consistent chart has w < 0 and x^2 = -uvw/(ab)",
                "map_raw": [
                    ("t^2", "(u-a)*(v-a)*(a-w)/(a*(b-a)*(1-a))"),
                    ("x^2", "u*v*w/(a*b)"),
                    ("y^2", "(u-b)*(v-b)*(b-w)/(b*(b-a)*(1-b))"),
                    ("z^2", "(u-1)*(1-v)*(1-w)/((1-a)*(1-b))"),
                ],
                "map": [
                    ("t^2", "(u-a)*(v-a)*(a-w)/(a*(b-a)*(1-a))"),
                    ("x^2", "-u*v*w/(a*b)"),
                    ("y^2", "(u-b)*(v-b)*(b-w)/(b*(b-a)*(1-b))"),
                    ("z^2", "(u-1)*(1-v)*(1-w)/((1-a)*(1-b))"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*u*(u-a)*(u-b)*(u-1))",
                    "(u-v)*(v-w)/(4*v*(v-a)*(v-b)*(1-v))",
                    "(u-w)*(v-w)/(4*w*(w-a)*(b-w)*(1-w))",
                ),
            }
        ],
    },
    {
        "id": "H-21",
        "name": "Complex ellipsoidal web",
        "section": "4.12",
        "form": [("complex", "0", "1"), (1, 1, "a"), (1, 1, "b")],
        "params": {"a": -0.5, "b": 0.5},
        "constraint": "rpair",
        "ict": {
            "k": 0,
            "complex_pair": ("0", "1"),
            "diag": [("y", "a", 1), ("z", "b", 1)],
        },
        "charts": [
            {
                "ranges": [("u", "b", "inf"), ("v", "a", "b"), ("w", "-inf", "a")],
                "region": "t > 0 and x > 0 and y > 0 and z > 0",
                "branch_note": "all-positive octant; other sheets via x^i -> -x^i",
                "ict_chain": "w < a < v < b < u",
                "map": [
                    (
                        "t^2+x^2",
                        "sqrt(u^2+1)*sqrt(v^2+1)*sqrt(w^2+1)/(sqrt(a^2+1)*sqrt(b^2+1))",
                    ),
                    (
                        "t^2-x^2",
                        "((a+b)*(u+v+w-u*v*w) + (a*b-1)*(u*v+u*w+v*w-1))/((a^2+1)*(b^2+1))",
                    ),
                    ("y^2", "(u-a)*(v-a)*(a-w)/((b-a)*(a^2+1))"),
                    ("z^2", "(u-b)*(b-v)*(b-w)/((b-a)*(b^2+1))"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*(u^2+1)*(u-a)*(u-b))",
                    "(u-v)*(v-w)/(4*(v^2+1)*(v-a)*(b-v))",
                    "(u-w)*(v-w)/(4*(w^2+1)*(a-w)*(b-w))",
                ),
            }
        ],
    },
    {
        "id": "H-22",
        "name": "Parabolically-embedded translational web",
        "section": "4.13",
        "form": [(2, 1, "0"), (1, 1, "0"), (1, 1, "0")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [
                    ("u", "-inf", "inf"),
                    ("v", "-inf", "inf"),
                    ("w", "-inf", "inf"),
                ],
                "region": "t+x > 0 and t > 0",
                "map": [
                    ("t-x", "exp(-u) + exp(u)*(v^2 + w^2)"),
                    ("t+x", "exp(u)"),
                    ("y", "exp(u)*v"),
                    ("z", "exp(u)*w"),
                ],
                "metric": ("1", "exp(2*u)", "exp(2*u)"),
            }
        ],
    },
    {
        "id": "H-23",
        "name": "Parabolically-embedded polar web",
        "section": "4.13",
        "form": [(2, 1, "0"), (1, 1, "0"), (1, 1, "0")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [("u", "-inf", "inf"), ("v", "0", "inf"), ("w", "0", "2*pi")],
                "region": "t+x > 0 and t > 0",
                "erratum": "printed z = e^u cos(w) omits the radial factor v; the embedding identity forces z = e^u v cos(w)",
                "map_raw": [
                    ("t-x", "exp(-u) + exp(u)*v^2"),
                    ("t+x", "exp(u)"),
                    ("y", "exp(u)*v*sin(w)"),
                    ("z", "exp(u)*cos(w)"),
                ],
                "map": [
                    ("t-x", "exp(-u) + exp(u)*v^2"),
                    ("t+x", "exp(u)"),
                    ("y", "exp(u)*v*sin(w)"),
                    ("z", "exp(u)*v*cos(w)"),
                ],
                "metric": ("1", "exp(2*u)", "exp(2*u)*v^2"),
            }
        ],
    },
    {
        "id": "H-24",
        "name": "Parabolically-embedded elliptic web",
        "section": "4.13",
        "form": [(2, 1, "0"), (1, 1, "0"), (1, 1, "0")],
        "params": {"a": 0.6},
        "constraint": "apos",
        "charts": [
            {
                "ranges": [("u", "-inf", "inf"), ("v", "0", "inf"), ("w", "0", "2*pi")],
                "region": "t+x > 0 and t > 0",
                "map": [
                    ("t-x", "exp(-u) + a^2*exp(u)*(cosh(v)^2 - sin(w)^2)"),
                    ("t+x", "exp(u)"),
                    ("y", "a*exp(u)*cosh(v)*cos(w)"),
                    ("z", "a*exp(u)*sinh(v)*sin(w)"),
                ],
                "metric": (
                    "1",
                    "a^2*exp(2*u)*(cosh(v)^2 - cos(w)^2)",
                    "a^2*exp(2*u)*(cosh(v)^2 - cos(w)^2)",
                ),
            }
        ],
    },
    {
        "id": "H-25",
        "name": "Parabolically-embedded parabolic web",
        "section": "4.13",
        "form": [(2, 1, "0"), (1, 1, "0"), (1, 1, "0")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [("u", "-inf", "inf"), ("v", "0", "inf"), ("w", "0", "2*pi")],
                "region": "t+x > 0 and t > 0",
                "map": [
                    ("t-x", "exp(-u) + exp(u)*(v^2 + w^2)^2/4"),
                    ("t+x", "exp(u)"),
                    ("y", "exp(u)*(v^2 - w^2)/2"),
                    ("z", "exp(u)*v*w"),
                ],
                "metric": (
                    "1",
                    "exp(2*u)*(v^2 + w^2)",
                    "exp(2*u)*(v^2 + w^2)",
                ),
            }
        ],
    },
    {
        "id": "H-26",
        "name": "Null rotational web II",
        "section": "4.14",
        "form": [(2, 1, "0"), (1, 1, "0"), (1, 1, "1")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [
                    ("u", "-inf", "inf"),
                    ("v", "0", "pi/2"),
                    ("w", "-inf", "inf"),
                ],
                "region": "t+x > 0 and t > 0",
                "erratum": "printed t-x has '- u^2 sec(v) sech(w)'; the parabolic lift adds + u^2 (t+x) (hyperquadric identity fails with the minus sign)",
                "map_raw": [
                    (
                        "t-x",
                        "cos(v)*cosh(w)*(1 + tan(v)^2*tanh(w)^2) - u^2*sec(v)*sech(w)",
                    ),
                    ("t+x", "sec(v)*sech(w)"),
                    ("y", "u*sec(v)*sech(w)"),
                    ("z", "tan(v)*tanh(w)"),
                ],
                "map": [
                    (
                        "t-x",
                        "cos(v)*cosh(w)*(1 + tan(v)^2*tanh(w)^2) + u^2*sec(v)*sech(w)",
                    ),
                    ("t+x", "sec(v)*sech(w)"),
                    ("y", "u*sec(v)*sech(w)"),
                    ("z", "tan(v)*tanh(w)"),
                ],
                "metric": (
                    "sec(v)^2*sech(w)^2",
                    "sec(v)^2 - sech(w)^2",
                    "sec(v)^2 - sech(w)^2",
                ),
            }
        ],
    },
    {
        "id": "H-27",
        "name": "Null rotational web III",
        "section": "4.15",
        "form": [(2, 1, "0"), (1, 1, "0"), (1, 1, "-1")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [
                    ("u", "-inf", "inf"),
                    ("v", "0", "inf"),
                    ("w", "0", "pi/2"),
                ],
                "region": "t+x > 0 and t > 0",
                "erratum": "printed t+x = sec(v) sech(w) belongs to the web-6 lift; the base web here has t+x = csch(v) sec(w), and the metric bracket must be csch^2 v + sec^2 w as in the other lifts of this web",
                "map_raw": [
                    (
                        "t-x",
                        "sinh(v)*cos(w)*(1 + coth(v)^2*tan(w)^2) + u^2*csch(v)*sec(w)",
                    ),
                    ("t+x", "sec(v)*sech(w)"),
                    ("y", "u*csch(v)*sec(w)"),
                    ("z", "coth(v)*tan(w)"),
                ],
                "metric_raw": (
                    "csch(v)^2*sec(w)^2",
                    "csch(v)^2 - sec(w)^2",
                    "csch(v)^2 - sec(w)^2",
                ),
                "map": [
                    (
                        "t-x",
                        "sinh(v)*cos(w)*(1 + coth(v)^2*tan(w)^2) + u^2*csch(v)*sec(w)",
                    ),
                    ("t+x", "csch(v)*sec(w)"),
                    ("y", "u*csch(v)*sec(w)"),
                    ("z", "coth(v)*tan(w)"),
                ],
                "metric": (
                    "csch(v)^2*sec(w)^2",
                    "csch(v)^2 + sec(w)^2",
                    "csch(v)^2 + sec(w)^2",
                ),
            }
        ],
    },
    {
        "id": "H-28",
        "name": "Spacelike rotational web VII",
        "section": "4.16",
        "form": [(2, 1, "0"), (1, 1, "1"), (1, 1, "1")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [
                    ("u", "0", "2*pi"),
                    ("v", "0", "pi/2"),
                    ("w", "0", "inf"),
                ],
                "region": "t+x > 0 and t > 0 and y^2+z^2 > 0",
                "map": [
                    ("t-x", "cos(v)*cosh(w)*(1 + tan(v)^2*tanh(w)^2)"),
                    ("t+x", "sec(v)*sech(w)"),
                    ("y", "tan(v)*tanh(w)*sin(u)"),
                    ("z", "tan(v)*tanh(w)*cos(u)"),
                ],
                "metric": (
                    "tan(v)^2*tanh(w)^2",
                    "sec(v)^2 - sech(w)^2",
                    "sec(v)^2 - sech(w)^2",
                ),
            }
        ],
    },
    {
        "id": "H-29",
        "name": "Spacelike rotational web VIII",
        "section": "4.17",
        "form": [(2, 1, "0"), (1, 1, "-1"), (1, 1, "-1")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [
                    ("u", "0", "2*pi"),
                    ("v", "0", "inf"),
                    ("w", "0", "pi/2"),
                ],
                "region": "t+x > 0 and t > 0 and y^2+z^2 > 0",
                "erratum": "the metric bracket prints csch^2 v - sec^2 w; the base web's bracket is csch^2 v + sec^2 w as in its other lifts",
                "metric_raw": (
                    "coth(v)^2*tan(w)^2",
                    "csch(v)^2 - sec(w)^2",
                    "csch(v)^2 - sec(w)^2",
                ),
                "map": [
                    ("t-x", "sinh(v)*cos(w)*(1 + coth(v)^2*tan(w)^2)"),
                    ("t+x", "csch(v)*sec(w)"),
                    ("y", "coth(v)*tan(w)*sin(u)"),
                    ("z", "coth(v)*tan(w)*cos(u)"),
                ],
                "metric": (
                    "coth(v)^2*tan(w)^2",
                    "csch(v)^2 + sec(w)^2",
                    "csch(v)^2 + sec(w)^2",
                ),
            }
        ],
    },
    {
        "id": "H-30",
        "name": "Null ellipsoidal web I",
        "section": "4.18",
        "form": [(2, 1, "0"), (1, 1, "a"), (1, 1, "1")],
        "params": {"a": 0.45},
        "constraint": "unit",
        "ict": {"k": 2, "diag": [("y", "a", 1), ("z", "1", 1)]},
        "charts": [
            {
                "ranges": [("u", "1", "inf"), ("v", "a", "1"), ("w", "0", "a")],
                "region": "t+x > 0 and y > 0 and z > 0",
                "branch_note": "t+x, y, z > 0 branch; other sheets via x^i -> -x^i",
                "ict_chain": "0 < w < a < v < 1 < u",
                "map": [
                    ("(t+x)^2", "u*v*w/a"),
                    ("-t^2+x^2", "((1+a)*u*v*w - a*(u*v + u*w + v*w))/a^2"),
                    ("y^2", "(u-a)*(v-a)*(a-w)/(a^2*(1-a))"),
                    ("z^2", "(u-1)*(1-v)*(1-w)/(1-a)"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*u^2*(u-a)*(u-1))",
                    "(u-v)*(v-w)/(4*v^2*(v-a)*(1-v))",
                    "(u-w)*(v-w)/(4*w^2*(a-w)*(1-w))",
                ),
            }
        ],
    },
    {
        "id": "H-31",
        "name": "Null ellipsoidal web II",
        "section": "4.19",
        "form": [(2, 1, "0"), (1, 1, "a"), (1, 1, "-1")],
        "params": {"a": 0.6},
        "constraint": "apos",
        "ict": {"k": 2, "diag": [("y", "a", 1), ("z", "-1", 1)]},
        "charts": [
            {
                "ranges": [("u", "a", "inf"), ("v", "0", "a"), ("w", "-inf", "-1")],
                "region": "t+x > 0 and y > 0 and z > 0",
                "branch_note": "t+x, y, z > 0 branch; other sheets via x^i -> -x^i",
                "ict_chain": "w < -1 < 0 < v < a < u",
                "map": [
                    ("(t+x)^2", "-u*v*w/a"),
                    ("-t^2+x^2", "((a-1)*u*v*w + a*(u*v + u*w + v*w))/a^2"),
                    ("y^2", "(u-a)*(v-a)*(w-a)/(a^2*(1+a))"),
                    ("z^2", "-(u+1)*(v+1)*(w+1)/(1+a)"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*u^2*(u-a)*(u+1))",
                    "(u-v)*(v-w)/(4*v^2*(a-v)*(v+1))",
                    "(u-w)*(v-w)/(4*w^2*(w-a)*(w+1))",
                ),
            }
        ],
    },
    {
        "id": "H-32",
        "name": "Null ellipsoidal web III",
        "section": "4.20",
        "form": [(2, 1, "0"), (1, 1, "-a"), (1, 1, "-1")],
        "params": {"a": 0.6},
        "constraint": "unit",
        "ict": {"k": 2, "diag": [("y", "-a", 1), ("z", "-1", 1)]},
        "charts": [
            {
                "ranges": [("u", "0", "inf"), ("v", "-1", "-a"), ("w", "-inf", "-1")],
                "region": "t+x > 0 and y > 0 and z > 0",
                "branch_note": "t+x, y, z > 0 branch; other sheets via x^i -> -x^i",
                "ict_chain": "w < -1 < v < -a < 0 < u",
                "map": [
                    ("(t+x)^2", "u*v*w/a"),
                    ("-t^2+x^2", "-((1+a)*u*v*w + a*(u*v + u*w + v*w))/a^2"),
                    ("y^2", "(u+a)*(v+a)*(w+a)/(a^2*(1-a))"),
                    ("z^2", "-(u+1)*(v+1)*(w+1)/(1-a)"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*u^2*(u+a)*(u+1))",
                    "-(u-v)*(v-w)/(4*v^2*(v+a)*(v+1))",
                    "(u-w)*(v-w)/(4*w^2*(w+a)*(w+1))",
                ),
            }
        ],
    },
    {
        "id": "H-33",
        "name": "Null rotational web III",
        "section": "4.21",
        "form": [(3, 1, "0"), (1, 1, "0")],
        "params": {},
        "constraint": None,
        "note": "duplicate printed title with H-27; ids are the primary key",
        "charts": [
            {
                "ranges": [("u", "0", "inf"), ("v", "0", "inf"), ("w", "-inf", "inf")],
                "region": "t+x > 0 and t > 0",
                "map": [
                    ("t-x", "(u^2 + v^2)^2/(4*u*v) + w^2/(u*v)"),
                    ("t+x", "1/(u*v)"),
                    ("y", "(u^2 - v^2)/(2*u*v)"),
                    ("z", "w/(u*v)"),
                ],
                "metric": ("u^-2 + v^-2", "u^-2 + v^-2", "u^-2*v^-2"),
            }
        ],
    },
    {
        "id": "H-34",
        "name": "Null ellipsoidal web IV",
        "section": "4.22",
        "form": [(3, 1, "0"), (1, 1, "a")],
        "params": {"a": 0.6},
        "constraint": "apos",
        "ict": {"k": 3, "diag": [("z", "a", 1)]},
        "charts": [
            {
                "ranges": [("u", "a", "inf"), ("v", "0", "a"), ("w", "-inf", "0")],
                "region": "t+x > 0 and z > 0",
                "branch_note": "t+x, z > 0 branch; other sheets via x^i -> -x^i",
                "ict_chain": "w < 0 < v < a < u",
                "map": [
                    ("(t+x)^2", "-u*v*w/a"),
                    (
                        "-t^2+x^2+y^2",
                        "-(u+v+w)/a + (u*v + u*w + v*w)/a^2 - u*v*w/a^3",
                    ),
                    ("(t+x)*y", "(u*v + u*w + v*w)/(2*a) - u*v*w/(2*a^2)"),
                    ("z^2", "-(a-u)*(a-v)*(a-w)/a^3"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*u^3*(u-a))",
                    "-(u-v)*(v-w)/(4*v^3*(v-a))",
                    "(u-w)*(v-w)/(4*w^3*(w-a))",
                ),
            }
        ],
    },
]


DS3_WEBS = [
    {
        "id": "dS-1",
        "name": "Spacelike rotational web I",
        "section": "4.1",
        "form": FORM_41,
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [("u", "-inf", "inf"), ("v", "0", "pi"), ("w", "0", "2*pi")],
                "region": "x^2+y^2+z^2 > 0",
                "map": [
                    ("t", "sinh(u)"),
                    ("x", "cosh(u)*cos(v)"),
                    ("y", "cosh(u)*sin(v)*sin(w)"),
                    ("z", "cosh(u)*sin(v)*cos(w)"),
                ],
                "metric": ("-1", "cosh(u)^2", "cosh(u)^2*sin(v)^2"),
            }
        ],
    },
    {
        "id": "dS-2",
        "name": "de Sitter-elliptic web I",
        "section": "4.1",
        "form": FORM_41,
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "charts": [
            {
                "ranges": [
                    ("u", "-inf", "inf"),
                    ("v", "0", "4*K(a)"),
                    ("w", "-2*K(b)", "2*K(b)"),
                ],
                "region": "x^2+y^2+z^2 > 0",
                "erratum": "printed x, y, z carry sinh(u) although the metric line has cosh(u)^2 and the hyperquadric identity needs cosh(u)",
                "map_raw": [
                    ("t", "sinh(u)"),
                    ("x", "sinh(u)*sn(v;a)*dn(w;b)"),
                    ("y", "sinh(u)*cn(v;a)*cn(w;b)"),
                    ("z", "sinh(u)*dn(v;a)*sn(w;b)"),
                ],
                "map": [
                    ("t", "sinh(u)"),
                    ("x", "cosh(u)*sn(v;a)*dn(w;b)"),
                    ("y", "cosh(u)*cn(v;a)*cn(w;b)"),
                    ("z", "cosh(u)*dn(v;a)*sn(w;b)"),
                ],
                "metric": (
                    "-1",
                    "cosh(u)^2*(a^2*cn(v;a)^2 + b^2*cn(w;b)^2)",
                    "cosh(u)^2*(a^2*cn(v;a)^2 + b^2*cn(w;b)^2)",
                ),
            }
        ],
    },
    {
        "id": "dS-3",
        "name": "de Sitter-elliptic web I",
        "section": "4.2",
        "form": FORM_42,
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "charts": [
            {
                "ranges": [
                    ("u", "0", "inf"),
                    ("v", "0", "K(a)"),
                    ("w", "0", "K(b)"),
                ],
                "region": "-t^2+x^2+y^2 < 0 and t > 0",
                "map": [
                    ("t", "sinh(u)*nd(v;a)*ns(w;b)"),
                    ("x", "sinh(u)*sd(v;a)*ds(w;b)"),
                    ("y", "sinh(u)*cd(v;a)*cs(w;b)"),
                    ("z", "cosh(u)"),
                ],
                "metric": (
                    "-1",
                    "sinh(u)^2*(a^2*cd(v;a)^2 + cs(w;b)^2)",
                    "sinh(u)^2*(a^2*cd(v;a)^2 + cs(w;b)^2)",
                ),
            },
            {
                "ranges": [
                    ("u", "0", "pi"),
                    ("v", "0", "K(a)"),
                    ("w", "0", "K(a)"),
                ],
                "region": "-t^2+x^2+y^2 > 0",
                "map": [
                    ("t", "sin(u)*sac(v;a)*dn(w;a)"),
                    ("x", "sin(u)*nc(v;a)*cn(w;a)"),
                    ("y", "sin(u)*dc(v;a)*sn(w;a)"),
                    ("z", "cos(u)"),
                ],
                "metric": (
                    "1",
                    "-sin(u)^2*(dc(v;a)^2 - a^2*sn(w;a)^2)",
                    "sin(u)^2*(dc(v;a)^2 - a^2*sn(w;a)^2)",
                ),
            },
        ],
    },
    {
        "id": "dS-4",
        "name": "de Sitter-elliptic web II",
        "section": "4.2",
        "form": FORM_42,
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "charts": [
            {
                "ranges": [
                    ("u", "0", "inf"),
                    ("v", "0", "K(a)"),
                    ("w", "0", "K(b)"),
                ],
                "region": "-t^2+x^2+y^2 < 0 and t > 0",
                "map": [
                    ("t", "sinh(u)*nc(v;a)*nc(w;b)"),
                    ("x", "sinh(u)*sac(v;a)*dc(w;b)"),
                    ("y", "sinh(u)*dc(v;a)*sac(w;b)"),
                    ("z", "cosh(u)"),
                ],
                "metric": (
                    "-1",
                    "sinh(u)^2*(dc(v;a)^2 + a^2*sac(w;b)^2)",
                    "sinh(u)^2*(dc(v;a)^2 + a^2*sac(w;b)^2)",
                ),
            },
            {
                "ranges": [
                    ("u", "0", "pi"),
                    ("v", "0", "K(a)"),
                    ("w", "0", "v"),
                ],
                "region": "-t^2+x^2+y^2 > 0 and a*abs(t) - abs(x) > b*sqrt(-t^2+x^2+y^2)",
                "map": [
                    ("t", "(b/a)*sin(u)*nc(v;a)*nc(w;a)"),
                    ("x", "b*sin(u)*sac(v;a)*sac(w;a)"),
                    ("y", "(1/a)*sin(u)*dc(v;a)*dc(w;a)"),
                    ("z", "cos(u)"),
                ],
                "metric": (
                    "1",
                    "-sin(u)^2*(dc(v;a)^2 - dc(w;a)^2)",
                    "sin(u)^2*(dc(v;a)^2 - dc(w;a)^2)",
                ),
            },
            {
                "ranges": [
                    ("u", "0", "pi"),
                    ("v", "0", "K(b)"),
                    ("w", "0", "v"),
                ],
                "region": "-t^2+x^2+y^2 > 0 and a*abs(t) + abs(x) < b*sqrt(-t^2+x^2+y^2)",
                "erratum": "printed x, y use modulus a on nd/cd factors though the metric line and the embedding identity need modulus b throughout; printed range K(a) likewise",
                "map_raw": [
                    ("t", "a*b*sin(u)*sd(v;b)*sd(w;b)"),
                    ("x", "b*sin(u)*cd(v;a)*cd(w;a)"),
                    ("y", "a*sin(u)*nd(v;a)*nd(w;a)"),
                    ("z", "cos(u)"),
                ],
                "map": [
                    ("t", "a*b*sin(u)*sd(v;b)*sd(w;b)"),
                    ("x", "b*sin(u)*cd(v;b)*cd(w;b)"),
                    ("y", "a*sin(u)*nd(v;b)*nd(w;b)"),
                    ("z", "cos(u)"),
                ],
                "metric": (
                    "1",
                    "a^2*sin(u)^2*(nd(v;b)^2 - nd(w;b)^2)",
                    "-a^2*sin(u)^2*(nd(v;b)^2 - nd(w;b)^2)",
                ),
            },
        ],
    },
    {
        "id": "dS-5",
        "name": "Spacelike rotational web II",
        "section": "4.2",
        "form": FORM_42,
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [("u", "0", "inf"), ("v", "0", "inf"), ("w", "0", "2*pi")],
                "region": "-t^2+x^2+y^2 < 0 and t > 0",
                "erratum": "printed t, x, y, z use sin/cos u against a -du^2 + sinh^2 u metric; the embedding identity forces sinh/cosh",
                "map_raw": [
                    ("t", "sin(u)*cosh(v)"),
                    ("x", "sin(u)*sinh(v)*cos(w)"),
                    ("y", "sin(u)*sinh(v)*sin(w)"),
                    ("z", "cos(u)"),
                ],
                "map": [
                    ("t", "sinh(u)*cosh(v)"),
                    ("x", "sinh(u)*sinh(v)*cos(w)"),
                    ("y", "sinh(u)*sinh(v)*sin(w)"),
                    ("z", "cosh(u)"),
                ],
                "metric": ("-1", "sinh(u)^2", "sinh(u)^2*sinh(v)^2"),
            },
            {
                "ranges": [("u", "0", "pi"), ("v", "0", "inf"), ("w", "0", "2*pi")],
                "region": "-t^2+x^2+y^2 > 0",
                "map": [
                    ("t", "sin(u)*sinh(v)"),
                    ("x", "sin(u)*cosh(v)*cos(w)"),
                    ("y", "sin(u)*cosh(v)*sin(w)"),
                    ("z", "cos(u)"),
                ],
                "metric": ("1", "-sin(u)^2", "sin(u)^2*cosh(v)^2"),
            },
        ],
    },
    {
        "id": "dS-6",
        "name": "Timelike rotational web I",
        "section": "4.2",
        "form": FORM_42,
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [
                    ("u", "0", "inf"),
                    ("v", "-inf", "inf"),
                    ("w", "-inf", "inf"),
                ],
                "region": "-t^2+x^2+y^2 < 0 and t > 0",
                "map": [
                    ("t", "sinh(u)*cosh(v)*cosh(w)"),
                    ("x", "sinh(u)*cosh(v)*sinh(w)"),
                    ("y", "sinh(u)*sinh(v)"),
                    ("z", "cosh(u)"),
                ],
                "metric": ("-1", "sinh(u)^2", "sinh(u)^2*cosh(v)^2"),
            },
            {
                "ranges": [("u", "0", "pi"), ("v", "0", "pi"), ("w", "-inf", "inf")],
                "region": "-t^2+x^2+y^2 > 0 and -t^2+x^2 > 0",
                "map": [
                    ("t", "sin(u)*sin(v)*sinh(w)"),
                    ("x", "sin(u)*sin(v)*cosh(w)"),
                    ("y", "sin(u)*cos(v)"),
                    ("z", "cos(u)"),
                ],
                "metric": ("1", "sin(u)^2", "-sin(u)^2*sin(v)^2"),
            },
            {
                "ranges": [("u", "0", "pi"), ("v", "0", "inf"), ("w", "-inf", "inf")],
                "region": "-t^2+x^2+y^2 > 0 and -t^2+x^2 < 0",
                "map": [
                    ("t", "sin(u)*sinh(v)*cosh(w)"),
                    ("x", "sin(u)*sinh(v)*sinh(w)"),
                    ("y", "sin(u)*cosh(v)"),
                    ("z", "cos(u)"),
                ],
                "metric": ("1", "-sin(u)^2", "sin(u)^2*sinh(v)^2"),
            },
        ],
    },
    {
        "id": "dS-7",
        "name": "de Sitter-complex elliptic web",
        "section": "4.2",
        "form": FORM_42,
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "charts": [
            {
                "ranges": [
                    ("u", "0", "inf"),
                    ("v", "0", "K(a)"),
                    ("w", "0", "K(b)"),
                ],
                "region": "-t^2+x^2+y^2 < 0 and t > 0 and x > 0",
                "branch_note": "t, x >= 0 sheet; others via t -> -t, x -> -x",
                "erratum": "printed y, z use sin/cos u and mix moduli (y has w;a, the t^2-x^2 denominator has 2w;a); the -du^2+sinh^2 u metric and the embedding identity force sinh/cosh and modulus b on the w slots",
                "map_raw": [
                    (
                        "t^2+x^2",
                        "2*sinh(u)^2*dn(2*v;a)*dn(2*w;b)/(a*b*(1+cn(2*v;a))*(1+cn(2*w;b)))",
                    ),
                    (
                        "t^2-x^2",
                        "2*sinh(u)^2*(1+cn(2*v;a)*cn(2*w;b))/((1+cn(2*v;a))*(1+cn(2*w;a)))",
                    ),
                    ("y", "sin(u)*sn(v;a)*dc(v;a)*sn(w;a)*dc(w;a)"),
                    ("z", "cos(u)"),
                ],
                "map": [
                    (
                        "t^2+x^2",
                        "2*sinh(u)^2*dn(2*v;a)*dn(2*w;b)/(a*b*(1+cn(2*v;a))*(1+cn(2*w;b)))",
                    ),
                    (
                        "t^2-x^2",
                        "2*sinh(u)^2*(1+cn(2*v;a)*cn(2*w;b))/((1+cn(2*v;a))*(1+cn(2*w;b)))",
                    ),
                    ("y", "sinh(u)*sn(v;a)*dc(v;a)*sn(w;b)*dc(w;b)"),
                    ("z", "cosh(u)"),
                ],
                "metric": (
                    "-1",
                    "sinh(u)^2*(sn(v;a)^2*dc(v;a)^2 + sn(w;b)^2*dc(w;b)^2)",
                    "sinh(u)^2*(sn(v;a)^2*dc(v;a)^2 + sn(w;b)^2*dc(w;b)^2)",
                ),
            },
            {
                "ranges": [
                    ("u", "0", "pi"),
                    ("v", "0", "K(a)"),
                    ("w", "0", "v"),
                ],
                "region": "-t^2+x^2+y^2 > 0 and t > 0 and x > 0",
                "branch_note": "t, x >= 0 sheet; others via t -> -t, x -> -x",
                "map": [
                    (
                        "t^2+x^2",
                        "2*sin(u)^2*dn(2*v;a)*dn(2*w;a)/(a*b*(1+cn(2*v;a))*(1+cn(2*w;a)))",
                    ),
                    (
                        "-t^2+x^2",
                        "2*sin(u)^2*(cn(2*v;a) + cn(2*w;a))/((1+cn(2*v;a))*(1+cn(2*w;a)))",
                    ),
                    ("y", "sin(u)*sn(v;a)*dc(v;a)*sn(w;a)*dc(w;a)"),
                    ("z", "cos(u)"),
                ],
                "metric": (
                    "1",
                    "-sin(u)^2*(sn(v;a)^2*dc(v;a)^2 - sn(w;a)^2*dc(w;a)^2)",
                    "sin(u)^2*(sn(v;a)^2*dc(v;a)^2 - sn(w;a)^2*dc(w;a)^2)",
                ),
            },
        ],
    },
    {
        "id": "dS-8",
        "name": "de Sitter-null elliptic web I",
        "section": "4.2",
        "form": FORM_42,
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [
                    ("u", "0", "inf"),
                    ("v", "0", "pi/2"),
                    ("w", "0", "inf"),
                ],
                "region": "-t^2+x^2+y^2 < 0 and t > 0",
                "map": [
                    ("t+x", "sinh(u)*sec(v)*sech(w)"),
                    ("t-x", "sinh(u)*cos(v)*cosh(w)*(1 + tan(v)^2*tanh(w)^2)"),
                    ("y", "sinh(u)*tan(v)*tanh(w)"),
                    ("z", "cosh(u)"),
                ],
                "metric": (
                    "-1",
                    "sinh(u)^2*(sec(v)^2 - sech(w)^2)",
                    "sinh(u)^2*(sec(v)^2 - sech(w)^2)",
                ),
            },
            {
                "ranges": [("u", "0", "pi"), ("v", "0", "inf"), ("w", "0", "inf")],
                "region": "-t^2+x^2+y^2 > 0",
                "map": [
                    ("t+x", "sin(u)*sech(v)*csch(w)"),
                    ("t-x", "-sin(u)*cosh(v)*sinh(w)*(1 - tanh(v)^2*coth(w)^2)"),
                    ("y", "sin(u)*tanh(v)*coth(w)"),
                    ("z", "cos(u)"),
                ],
                "metric": (
                    "1",
                    "sin(u)^2*(sech(v)^2 + csch(w)^2)",
                    "-sin(u)^2*(sech(v)^2 + csch(w)^2)",
                ),
            },
        ],
    },
    {
        "id": "dS-9",
        "name": "de Sitter-null elliptic web II",
        "section": "4.2",
        "form": FORM_42,
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [
                    ("u", "0", "inf"),
                    ("v", "0", "inf"),
                    ("w", "0", "pi/2"),
                ],
                "region": "-t^2+x^2+y^2 < 0 and t > 0",
                "map": [
                    ("t+x", "sinh(u)*csch(v)*sec(w)"),
                    ("t-x", "sinh(u)*sinh(v)*cos(w)*(1 + coth(v)^2*tan(w)^2)"),
                    ("y", "sinh(u)*coth(v)*tan(w)"),
                    ("z", "cosh(u)"),
                ],
                "metric": (
                    "-1",
                    "sinh(u)^2*(csch(v)^2 + sec(w)^2)",
                    "sinh(u)^2*(csch(v)^2 + sec(w)^2)",
                ),
            },
            {
                "ranges": [("u", "0", "pi"), ("v", "0", "pi/2"), ("w", "0", "v")],
                "region": "-t^2+x^2+y^2 > 0 and abs(x) > sqrt(-t^2+x^2+y^2) and t*x > 0",
                "map": [
                    ("t+x", "sin(u)*sec(v)*sec(w)"),
                    ("t-x", "-sin(u)*cos(v)*cos(w)*(1 - tan(v)^2*tan(w)^2)"),
                    ("y", "sin(u)*tan(v)*tan(w)"),
                    ("z", "cos(u)"),
                ],
                "metric": (
                    "1",
                    "-sin(u)^2*(sec(v)^2 - sec(w)^2)",
                    "sin(u)^2*(sec(v)^2 - sec(w)^2)",
                ),
            },
            {
                "ranges": [("u", "0", "pi"), ("v", "0", "inf"), ("w", "0", "v")],
                "region": "-t^2+x^2+y^2 > 0 and abs(x) > sqrt(-t^2+x^2+y^2) and t*x < 0 and y^2 > -t^2+x^2+y^2",
                "map": [
                    ("t+x", "sin(u)*csch(v)*csch(w)"),
                    ("t-x", "-sin(u)*sinh(v)*sinh(w)*(1 - coth(v)^2*coth(w)^2)"),
                    ("y", "sin(u)*coth(v)*coth(w)"),
                    ("z", "cos(u)"),
                ],
                "erratum": "the printed bracket (csch^2 v - csch^2 w) is negative on 0 < w < v, so the printed (dv^2 - dw^2) pairing makes w timelike on the wrong slot; the induced metric has the pairing (-dv^2 + dw^2)",
                "metric_raw": (
                    "1",
                    "sin(u)^2*(csch(v)^2 - csch(w)^2)",
                    "-sin(u)^2*(csch(v)^2 - csch(w)^2)",
                ),
                "metric": (
                    "1",
                    "-sin(u)^2*(csch(v)^2 - csch(w)^2)",
                    "sin(u)^2*(csch(v)^2 - csch(w)^2)",
                ),
            },
            {
                "ranges": [("u", "0", "pi"), ("w", "0", "inf"), ("v", "0", "w")],
                "region": "-t^2+x^2+y^2 > 0 and abs(x) > sqrt(-t^2+x^2+y^2) and t*x < 0 and y^2 < -t^2+x^2+y^2",
                "map": [
                    ("t+x", "sin(u)*sech(v)*sech(w)"),
                    ("t-x", "-sin(u)*cosh(v)*cosh(w)*(1 - tanh(v)^2*tanh(w)^2)"),
                    ("y", "sin(u)*tanh(v)*tanh(w)"),
                    ("z", "cos(u)"),
                ],
                "metric": (
                    "1",
                    "sin(u)^2*(sech(v)^2 - sech(w)^2)",
                    "-sin(u)^2*(sech(v)^2 - sech(w)^2)",
                ),
            },
        ],
    },
    {
        "id": "dS-10",
        "name": "Null rotational web I",
        "section": "4.2",
        "form": FORM_42,
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [
                    ("u", "0", "inf"),
                    ("v", "-inf", "inf"),
                    ("w", "-inf", "inf"),
                ],
                "region": "-t^2+x^2+y^2 < 0 and t > 0",
                "map": [
                    ("t+x", "exp(v)*sinh(u)"),
                    ("t-x", "sinh(u)*(exp(-v) + w^2*exp(v))"),
                    ("y", "w*exp(v)*sinh(u)"),
                    ("z", "cosh(u)"),
                ],
                "metric": ("-1", "sinh(u)^2", "sinh(u)^2*exp(2*v)"),
            },
            {
                "ranges": [
                    ("u", "0", "pi"),
                    ("v", "-inf", "inf"),
                    ("w", "-inf", "inf"),
                ],
                "region": "-t^2+x^2+y^2 > 0",
                "map": [
                    ("t+x", "sin(u)*(exp(-v) - w^2*exp(v))"),
                    ("t-x", "-exp(v)*sin(u)"),
                    ("y", "w*exp(v)*sin(u)"),
                    ("z", "cos(u)"),
                ],
                "metric": ("1", "-sin(u)^2", "sin(u)^2*exp(2*v)"),
            },
        ],
    },
    {
        "id": "dS-11",
        "name": "de Sitter-null elliptic web III",
        "section": "4.2",
        "form": FORM_42,
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [("u", "0", "pi"), ("w", "0", "inf"), ("v", "0", "w")],
                "region": "-t^2+x^2+y^2 > 0",
                "map": [
                    ("t+x", "sin(u)/(v*w)"),
                    ("t-x", "sin(u)*(v^2 - w^2)^2/(4*v*w)"),
                    ("y", "sin(u)*(v^2 + w^2)/(2*v*w)"),
                    ("z", "cos(u)"),
                ],
                "metric": (
                    "1",
                    "-sin(u)^2*(v^-2 - w^-2)",
                    "sin(u)^2*(v^-2 - w^-2)",
                ),
            },
            {
                "ranges": [("u", "0", "inf"), ("v", "0", "inf"), ("w", "0", "inf")],
                "region": "-t^2+x^2+y^2 < 0 and t > 0",
                "map": [
                    ("t+x", "sinh(u)/(v*w)"),
                    ("t-x", "sinh(u)*(v^2 + w^2)^2/(4*v*w)"),
                    ("y", "sinh(u)*(w^2 - v^2)/(2*v*w)"),
                    ("z", "cosh(u)"),
                ],
                "metric": (
                    "-1",
                    "sinh(u)^2*(v^-2 + w^-2)",
                    "sinh(u)^2*(v^-2 + w^-2)",
                ),
            },
        ],
    },
    {
        "id": "dS-12",
        "name": "Spacelike-timelike rotational web",
        "section": "4.3",
        "form": [(1, -1, "0"), (1, 1, "0"), (1, 1, "1"), (1, 1, "1")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [("u", "0", "inf"), ("v", "-inf", "inf"), ("w", "0", "2*pi")],
                "region": "-t^2+x^2 < 0 and t > 0",
                "map": [
                    ("t", "sinh(u)*cosh(v)"),
                    ("x", "sinh(u)*sinh(v)"),
                    ("y", "cosh(u)*sin(w)"),
                    ("z", "cosh(u)*cos(w)"),
                ],
                "metric": ("-1", "sinh(u)^2", "cosh(u)^2"),
            },
            {
                "ranges": [
                    ("u", "0", "pi/2"),
                    ("v", "-inf", "inf"),
                    ("w", "0", "2*pi"),
                ],
                "region": "-t^2+x^2 > 0",
                "map": [
                    ("t", "cos(u)*sinh(v)"),
                    ("x", "cos(u)*cosh(v)"),
                    ("y", "sin(u)*sin(w)"),
                    ("z", "sin(u)*cos(w)"),
                ],
                "metric": ("1", "-cos(u)^2", "sin(u)^2"),
            },
        ],
    },
    {
        "id": "dS-13",
        "name": "Timelike rotational web II",
        "section": "4.4",
        "form": [(1, -1, "0"), (1, 1, "0"), (1, 1, "a^2"), (1, 1, "1")],
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "charts": [
            {
                "ranges": [
                    ("u", "0", "K(a)"),
                    ("v", "0", "K(a)"),
                    ("w", "-inf", "inf"),
                ],
                "region": "-t^2+x^2 < 0 and t > 0",
                "map": [
                    ("t", "sac(u;a)*dn(v;a)*cosh(w)"),
                    ("x", "sac(u;a)*dn(v;a)*sinh(w)"),
                    ("y", "nc(u;a)*cn(v;a)"),
                    ("z", "dc(u;a)*sn(v;a)"),
                ],
                "metric": (
                    "-(dc(u;a)^2 - a^2*sn(v;a)^2)",
                    "dc(u;a)^2 - a^2*sn(v;a)^2",
                    "sac(u;a)^2*dn(v;a)^2",
                ),
            },
            {
                "ranges": [
                    ("u", "0", "2*K(a)"),
                    ("v", "-K(b)", "K(b)"),
                    ("w", "-inf", "inf"),
                ],
                "region": "-t^2+x^2 > 0",
                "erratum": "printed y = cn(v;a) cn(w;b), z = dn(v;a) sn(w;b) reuse the wrong coordinate letters; the sphero-conal factor is carried by (u, v), so y = cn(u;a) cn(v;b), z = dn(u;a) sn(v;b)",
                "map_raw": [
                    ("t", "sn(u;a)*dn(v;b)*sinh(w)"),
                    ("x", "sn(u;a)*dn(v;b)*cosh(w)"),
                    ("y", "cn(v;a)*cn(w;b)"),
                    ("z", "dn(v;a)*sn(w;b)"),
                ],
                "map": [
                    ("t", "sn(u;a)*dn(v;b)*sinh(w)"),
                    ("x", "sn(u;a)*dn(v;b)*cosh(w)"),
                    ("y", "cn(u;a)*cn(v;b)"),
                    ("z", "dn(u;a)*sn(v;b)"),
                ],
                "metric": (
                    "a^2*cn(u;a)^2 + b^2*cn(v;b)^2",
                    "a^2*cn(u;a)^2 + b^2*cn(v;b)^2",
                    "-sn(u;a)^2*dn(v;b)^2",
                ),
            },
        ],
    },
    {
        "id": "dS-14",
        "name": "Timelike rotational web III",
        "section": "4.5",
        "form": [(1, -1, "0"), (1, 1, "0"), (1, 1, "-(a^2/(1-a^2))"), (1, 1, "1")],
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "charts": [
            {
                "ranges": [
                    ("u", "0", "K(a)"),
                    ("v", "0", "u"),
                    ("w", "-inf", "inf"),
                ],
                "region": "-t^2+x^2 < 0 and a*sqrt(t^2-x^2) - abs(y) > b",
                "erratum": "printed x = nc(u;a) nc(v;a) sinh(w) is missing the boost radius prefactor b/a carried by t and the metric's dw^2 term",
                "map_raw": [
                    ("t", "(b/a)*nc(u;a)*nc(v;a)*cosh(w)"),
                    ("x", "nc(u;a)*nc(v;a)*sinh(w)"),
                    ("y", "b*sac(u;a)*sac(v;a)"),
                    ("z", "(1/a)*dc(u;a)*dc(v;a)"),
                ],
                "map": [
                    ("t", "(b/a)*nc(u;a)*nc(v;a)*cosh(w)"),
                    ("x", "(b/a)*nc(u;a)*nc(v;a)*sinh(w)"),
                    ("y", "b*sac(u;a)*sac(v;a)"),
                    ("z", "(1/a)*dc(u;a)*dc(v;a)"),
                ],
                "metric": (
                    "-(dc(u;a)^2 - dc(v;a)^2)",
                    "dc(u;a)^2 - dc(v;a)^2",
                    "(b^2/a^2)*nc(u;a)^2*nc(v;a)^2",
                ),
            },
            {
                "ranges": [
                    ("u", "0", "K(b)"),
                    ("v", "0", "u"),
                    ("w", "-inf", "inf"),
                ],
                "region": "-t^2+x^2 < 0 and a*sqrt(t^2-x^2) + abs(y) < b",
                "erratum": "printed x = sd(u;b) sd(v;b) sinh(w) is missing the boost radius prefactor ab carried by t and the metric's dw^2 term",
                "map_raw": [
                    ("t", "a*b*sd(u;b)*sd(v;b)*cosh(w)"),
                    ("x", "sd(u;b)*sd(v;b)*sinh(w)"),
                    ("y", "b*cd(u;b)*cd(v;b)"),
                    ("z", "a*nd(u;b)*nd(v;b)"),
                ],
                "map": [
                    ("t", "a*b*sd(u;b)*sd(v;b)*cosh(w)"),
                    ("x", "a*b*sd(u;b)*sd(v;b)*sinh(w)"),
                    ("y", "b*cd(u;b)*cd(v;b)"),
                    ("z", "a*nd(u;b)*nd(v;b)"),
                ],
                "metric": (
                    "a^2*(nd(u;b)^2 - nd(v;b)^2)",
                    "-a^2*(nd(u;b)^2 - nd(v;b)^2)",
                    "a^2*b^2*sd(u;b)^2*sd(v;b)^2",
                ),
            },
            {
                "ranges": [
                    ("u", "-K(a)", "K(a)"),
                    ("v", "-K(b)", "K(b)"),
                    ("w", "-inf", "inf"),
                ],
                "region": "-t^2+x^2 > 0",
                "map": [
                    ("t", "cn(u;a)*cn(v;b)*sinh(w)"),
                    ("x", "cn(u;a)*cn(v;b)*cosh(w)"),
                    ("y", "sn(u;a)*dn(v;b)"),
                    ("z", "dn(u;a)*sn(v;b)"),
                ],
                "metric": (
                    "a^2*cn(u;a)^2 + b^2*cn(v;b)^2",
                    "a^2*cn(u;a)^2 + b^2*cn(v;b)^2",
                    "-cn(u;a)^2*cn(v;b)^2",
                ),
            },
        ],
    },
    {
        "id": "dS-15",
        "name": "Spacelike rotational web III",
        "section": "4.6",
        "form": [(1, -1, "1"), (1, 1, "a^2"), (1, 1, "0"), (1, 1, "0")],
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "charts": [
            {
                "ranges": [
                    ("u", "0", "K(a)"),
                    ("v", "0", "K(a)"),
                    ("w", "0", "2*pi"),
                ],
                "region": "y^2+z^2 > 0",
                "erratum": "the printed metric line ends with du^2; the rotational term is dw^2",
                "metric_raw": (
                    "-(dc(u;a)^2 - a^2*sn(v;a)^2) + dc(u;a)^2*sn(v;a)^2",
                    "dc(u;a)^2 - a^2*sn(v;a)^2",
                    "0",
                ),
                "map": [
                    ("t", "sac(u;a)*dn(v;a)"),
                    ("x", "nc(u;a)*cn(v;a)"),
                    ("y", "dc(u;a)*sn(v;a)*sin(w)"),
                    ("z", "dc(u;a)*sn(v;a)*cos(w)"),
                ],
                "metric": (
                    "-(dc(u;a)^2 - a^2*sn(v;a)^2)",
                    "dc(u;a)^2 - a^2*sn(v;a)^2",
                    "dc(u;a)^2*sn(v;a)^2",
                ),
            }
        ],
    },
    {
        "id": "dS-16",
        "name": "Spacelike rotational web IV",
        "section": "4.7",
        "form": [(1, -1, "a^2"), (1, 1, "1"), (1, 1, "0"), (1, 1, "0")],
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "charts": [
            {
                "ranges": [("u", "0", "K(a)"), ("v", "0", "u"), ("w", "0", "2*pi")],
                "region": "a*abs(t) - abs(x) > b",
                "map": [
                    ("t", "(b/a)*nc(u;a)*nc(v;a)"),
                    ("x", "b*sac(u;a)*sac(v;a)"),
                    ("y", "(1/a)*dc(u;a)*dc(v;a)*sin(w)"),
                    ("z", "(1/a)*dc(u;a)*dc(v;a)*cos(w)"),
                ],
                "metric": (
                    "-(dc(u;a)^2 - dc(v;a)^2)",
                    "dc(u;a)^2 - dc(v;a)^2",
                    "(1/a^2)*dc(u;a)^2*dc(v;a)^2",
                ),
            },
            {
                "ranges": [("u", "0", "K(b)"), ("v", "0", "u"), ("w", "0", "2*pi")],
                "region": "a*abs(t) + abs(x) < b",
                "map": [
                    ("t", "a*b*sd(u;b)*sd(v;b)"),
                    ("x", "b*cd(u;b)*cd(v;b)"),
                    ("y", "a*nd(u;b)*nd(v;b)*sin(w)"),
                    ("z", "a*nd(u;b)*nd(v;b)*cos(w)"),
                ],
                "metric": (
                    "a^2*(nd(u;b)^2 - nd(v;b)^2)",
                    "-a^2*(nd(u;b)^2 - nd(v;b)^2)",
                    "a^2*nd(u;b)^2*nd(v;b)^2",
                ),
            },
        ],
    },
    {
        "id": "dS-17",
        "name": "Spacelike rotational web V",
        "section": "4.8",
        "form": [(1, -1, "1"), (1, 1, "-(a^2/(1-a^2))"), (1, 1, "0"), (1, 1, "0")],
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "charts": [
            {
                "ranges": [
                    ("u", "0", "K(a)"),
                    ("v", "0", "K(a)"),
                    ("w", "0", "2*pi"),
                ],
                "region": "y^2+z^2 > 0",
                "erratum": "the printed metric line ends with du^2; the rotational term is dw^2",
                "metric_raw": (
                    "-(dc(u;a)^2 - a^2*sn(v;a)^2) + nc(u;a)^2*cn(v;a)^2",
                    "dc(u;a)^2 - a^2*sn(v;a)^2",
                    "0",
                ),
                "map": [
                    ("t", "sac(u;a)*dn(v;a)"),
                    ("x", "dc(u;a)*sn(v;a)"),
                    ("y", "nc(u;a)*cn(v;a)*sin(w)"),
                    ("z", "nc(u;a)*cn(v;a)*cos(w)"),
                ],
                "metric": (
                    "-(dc(u;a)^2 - a^2*sn(v;a)^2)",
                    "dc(u;a)^2 - a^2*sn(v;a)^2",
                    "nc(u;a)^2*cn(v;a)^2",
                ),
            }
        ],
    },
    {
        "id": "dS-18",
        "name": "Spacelike rotational web VI",
        "section": "4.9",
        "form": [("complex", "0", "1"), (1, 1, "0"), (1, 1, "0")],
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "note": "the free parameter c of this case is normalized away; the chart does not depend on it",
        "charts": [
            {
                "ranges": [("u", "0", "K(a)"), ("v", "0", "u"), ("w", "0", "2*pi")],
                "region": "y^2+z^2 > 0 and t > 0 and x > 0",
                "branch_note": "t, x >= 0 sheet and u > v representative",
                "map": [
                    (
                        "t^2+x^2",
                        "2*dn(2*u;a)*dn(2*v;a)/(a*b*(1+cn(2*u;a))*(1+cn(2*v;a)))",
                    ),
                    (
                        "-t^2+x^2",
                        "2*(cn(2*u;a) + cn(2*v;a))/((1+cn(2*u;a))*(1+cn(2*v;a)))",
                    ),
                    ("y", "sn(u;a)*dc(u;a)*sn(v;a)*dc(v;a)*sin(w)"),
                    ("z", "sn(u;a)*dc(u;a)*sn(v;a)*dc(v;a)*cos(w)"),
                ],
                "metric": (
                    "-(sn(u;a)^2*dc(u;a)^2 - sn(v;a)^2*dc(v;a)^2)",
                    "sn(u;a)^2*dc(u;a)^2 - sn(v;a)^2*dc(v;a)^2",
                    "sn(u;a)^2*dc(u;a)^2*sn(v;a)^2*dc(v;a)^2",
                ),
            }
        ],
    },
    {
        "id": "dS-19",
        "name": "Real ellipsoidal web I",
        "section": "4.10",
        "form": [(1, -1, "0"), (1, 1, "a"), (1, 1, "b"), (1, 1, "1")],
        "params": {"a": 0.25, "b": 0.5},
        "constraint": "opair",
        "ict": {"k": 0, "diag": [("t", "0", -1), ("x", "a", 1), ("y", "b", 1), ("z", "1", 1)]},
        "charts": [
            {
                "ranges": [("u", "b", "1"), ("v", "a", "b"), ("w", "-inf", "0")],
                "region": "t > 0 and x > 0 and y > 0 and z > 0",
                "branch_note": "all-positive octant; other sheets via x^i -> -x^i",
                "ict_chain": "w < 0 < a < v < b < u < 1",
                "timelike": "w",
                "map": [
                    ("t^2", "-u*v*w/(a*b)"),
                    ("x^2", "(a-u)*(a-v)*(a-w)/(a*(b-a)*(1-a))"),
                    ("y^2", "(u-b)*(b-v)*(b-w)/(b*(b-a)*(1-b))"),
                    ("z^2", "(1-u)*(1-v)*(1-w)/((1-a)*(1-b))"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*u*(u-a)*(u-b)*(1-u))",
                    "(u-v)*(v-w)/(4*v*(v-a)*(b-v)*(1-v))",
                    "(u-w)*(v-w)/(4*w*(a-w)*(b-w)*(1-w))",
                ),
            }
        ],
    },
    {
        "id": "dS-20",
        "name": "Real ellipsoidal web II",
        "section": "4.11",
        "form": [(1, -1, "a"), (1, 1, "0"), (1, 1, "b"), (1, 1, "1")],
        "params": {"a": 0.25, "b": 0.5},
        "constraint": "opair",
        "ict": {"k": 0, "diag": [("t", "a", -1), ("x", "0", 1), ("y", "b", 1), ("z", "1", 1)]},
        "charts": [
            {
                "ranges": [("w", "b", "1"), ("v", "1", "inf"), ("u", "v", "inf")],
                "region": "t > 0 and x > 0 and y > 0 and z > 0",
                "branch_note": "all-positive octant; other sheets via x^i -> -x^i",
                "ict_chain": "0 < a < b < w < 1 < v < u",
                "timelike": "u",
                "map": [
                    ("t^2", "(u-a)*(v-a)*(w-a)/(a*(b-a)*(1-a))"),
                    ("x^2", "u*v*w/(a*b)"),
                    ("y^2", "(u-b)*(b-v)*(b-w)/(b*(b-a)*(1-b))"),
                    ("z^2", "(1-u)*(1-v)*(1-w)/((1-a)*(1-b))"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*u*(u-a)*(u-b)*(1-u))",
                    "(u-v)*(v-w)/(4*v*(v-a)*(b-v)*(1-v))",
                    "(u-w)*(v-w)/(4*w*(a-w)*(b-w)*(1-w))",
                ),
            },
            {
                "ranges": [("w", "b", "1"), ("v", "w", "1"), ("u", "v", "1")],
                "region": "t > 0 and x > 0 and y > 0 and z > 0",
                "branch_note": "all-positive octant; other sheets via x^i -> -x^i",
                "ict_chain": "0 < a < b < w < v < u < 1",
                "timelike": "v",
                "map": [
                    ("t^2", "(u-a)*(v-a)*(w-a)/(a*(b-a)*(1-a))"),
                    ("x^2", "u*v*w/(a*b)"),
                    ("y^2", "(u-b)*(b-v)*(b-w)/(b*(b-a)*(1-b))"),
                    ("z^2", "(1-u)*(1-v)*(1-w)/((1-a)*(1-b))"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*u*(u-a)*(u-b)*(1-u))",
                    "(u-v)*(v-w)/(4*v*(v-a)*(b-v)*(1-v))",
                    "(u-w)*(v-w)/(4*w*(a-w)*(b-w)*(1-w))",
                ),
            },
            {
                "ranges": [("w", "a", "b"), ("v", "w", "b"), ("u", "b", "1")],
                "region": "t > 0 and x > 0 and y > 0 and z > 0",
                "branch_note": "all-positive octant; other sheets via x^i -> -x^i",
                "ict_chain": "0 < a < w < v < b < u < 1",
                "timelike": "w",
                "map": [
                    ("t^2", "(u-a)*(v-a)*(w-a)/(a*(b-a)*(1-a))"),
                    ("x^2", "u*v*w/(a*b)"),
                    ("y^2", "(u-b)*(b-v)*(b-w)/(b*(b-a)*(1-b))"),
                    ("z^2", "(1-u)*(1-v)*(1-w)/((1-a)*(1-b))"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*u*(u-a)*(u-b)*(1-u))",
                    "(u-v)*(v-w)/(4*v*(v-a)*(b-v)*(1-v))",
                    "(u-w)*(v-w)/(4*w*(a-w)*(b-w)*(1-w))",
                ),
            },
            {
                "ranges": [("w", "0", "a"), ("v", "w", "a"), ("u", "b", "1")],
                "region": "t > 0 and x > 0 and y > 0 and z > 0",
                "branch_note": "all-positive octant; other sheets via x^i -> -x^i",
                "ict_chain": "0 < w < v < a < b < u < 1",
                "timelike": "v",
                "map": [
                    ("t^2", "(u-a)*(v-a)*(w-a)/(a*(b-a)*(1-a))"),
                    ("x^2", "u*v*w/(a*b)"),
                    ("y^2", "(u-b)*(b-v)*(b-w)/(b*(b-a)*(1-b))"),
                    ("z^2", "(1-u)*(1-v)*(1-w)/((1-a)*(1-b))"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*u*(u-a)*(u-b)*(1-u))",
                    "(u-v)*(v-w)/(4*v*(v-a)*(b-v)*(1-v))",
                    "(u-w)*(v-w)/(4*w*(a-w)*(b-w)*(1-w))",
                ),
            },
            {
                "ranges": [("v", "-inf", "0"), ("w", "-inf", "v"), ("u", "b", "1")],
                "region": "t > 0 and x > 0 and y > 0 and z > 0",
                "branch_note": "all-positive octant; other sheets via x^i -> -x^i",
                "ict_chain": "w < v < 0 < a < b < u < 1",
                "timelike": "w",
                "map": [
                    ("t^2", "(u-a)*(v-a)*(w-a)/(a*(b-a)*(1-a))"),
                    ("x^2", "u*v*w/(a*b)"),
                    ("y^2", "(u-b)*(b-v)*(b-w)/(b*(b-a)*(1-b))"),
                    ("z^2", "(1-u)*(1-v)*(1-w)/((1-a)*(1-b))"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*u*(u-a)*(u-b)*(1-u))",
                    "(u-v)*(v-w)/(4*v*(v-a)*(b-v)*(1-v))",
                    "(u-w)*(v-w)/(4*w*(a-w)*(b-w)*(1-w))",
                ),
            },
        ],
    },
    {
        "id": "dS-21",
        "name": "Complex ellipsoidal web",
        "section": "4.12",
        "form": [("complex", "0", "1"), (1, 1, "a"), (1, 1, "b")],
        "params": {"a": -0.5, "b": 0.5},
        "constraint": "rpair",
        "ict": {
            "k": 0,
            "complex_pair": ("0", "1"),
            "diag": [("y", "a", 1), ("z", "b", 1)],
        },
        "charts": [
            {
                "ranges": [("u", "a", "b"), ("v", "-inf", "a"), ("w", "-inf", "v")],
                "region": "t > 0 and x > 0 and y > 0 and z > 0",
                "branch_note": "all-positive octant; other sheets via x^i -> -x^i",
                "ict_chain": "w < v < a < u < b",
                "timelike": "w",
                "erratum": "the printed x^2-t^2 numerator has (1-ab)(uv+uw+vw-1); the hyperquadric identity (and the complex-slot transformation) require (ab-1)",
                "map_raw": [
                    (
                        "t^2+x^2",
                        "sqrt(u^2+1)*sqrt(v^2+1)*sqrt(w^2+1)/(sqrt(a^2+1)*sqrt(b^2+1))",
                    ),
                    (
                        "x^2-t^2",
                        "((a+b)*(u+v+w-u*v*w) + (1-a*b)*(u*v+u*w+v*w-1))/((a^2+1)*(b^2+1))",
                    ),
                    ("y^2", "(u-a)*(a-v)*(a-w)/((b-a)*(a^2+1))"),
                    ("z^2", "(b-u)*(b-v)*(b-w)/((b-a)*(b^2+1))"),
                ],
                "map": [
                    (
                        "t^2+x^2",
                        "sqrt(u^2+1)*sqrt(v^2+1)*sqrt(w^2+1)/(sqrt(a^2+1)*sqrt(b^2+1))",
                    ),
                    (
                        "x^2-t^2",
                        "((a+b)*(u+v+w-u*v*w) + (a*b-1)*(u*v+u*w+v*w-1))/((a^2+1)*(b^2+1))",
                    ),
                    ("y^2", "(u-a)*(a-v)*(a-w)/((b-a)*(a^2+1))"),
                    ("z^2", "(b-u)*(b-v)*(b-w)/((b-a)*(b^2+1))"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*(u^2+1)*(u-a)*(b-u))",
                    "(u-v)*(v-w)/(4*(v^2+1)*(v-a)*(v-b))",
                    "(u-w)*(v-w)/(4*(w^2+1)*(w-a)*(b-w))",
                ),
            },
            {
                "ranges": [("w", "a", "b"), ("v", "b", "inf"), ("u", "v", "inf")],
                "region": "t > 0 and x > 0 and y > 0 and z > 0",
                "branch_note": "all-positive octant; other sheets via x^i -> -x^i",
                "ict_chain": "a < w < b < v < u",
                "timelike": "u",
                "erratum": "the printed x^2-t^2 numerator has (1-ab)(uv+uw+vw-1); the hyperquadric identity (and the complex-slot transformation) require (ab-1)",
                "map_raw": [
                    (
                        "t^2+x^2",
                        "sqrt(u^2+1)*sqrt(v^2+1)*sqrt(w^2+1)/(sqrt(a^2+1)*sqrt(b^2+1))",
                    ),
                    (
                        "x^2-t^2",
                        "((a+b)*(u+v+w-u*v*w) + (1-a*b)*(u*v+u*w+v*w-1))/((a^2+1)*(b^2+1))",
                    ),
                    ("y^2", "(u-a)*(a-v)*(a-w)/((b-a)*(a^2+1))"),
                    ("z^2", "(b-u)*(b-v)*(b-w)/((b-a)*(b^2+1))"),
                ],
                "map": [
                    (
                        "t^2+x^2",
                        "sqrt(u^2+1)*sqrt(v^2+1)*sqrt(w^2+1)/(sqrt(a^2+1)*sqrt(b^2+1))",
                    ),
                    (
                        "x^2-t^2",
                        "((a+b)*(u+v+w-u*v*w) + (a*b-1)*(u*v+u*w+v*w-1))/((a^2+1)*(b^2+1))",
                    ),
                    ("y^2", "(u-a)*(a-v)*(a-w)/((b-a)*(a^2+1))"),
                    ("z^2", "(b-u)*(b-v)*(b-w)/((b-a)*(b^2+1))"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*(u^2+1)*(u-a)*(b-u))",
                    "(u-v)*(v-w)/(4*(v^2+1)*(v-a)*(v-b))",
                    "(u-w)*(v-w)/(4*(w^2+1)*(w-a)*(b-w))",
                ),
            },
            {
                "ranges": [("w", "a", "b"), ("v", "w", "b"), ("u", "v", "b")],
                "region": "t > 0 and x > 0 and y > 0 and z > 0",
                "branch_note": "all-positive octant; other sheets via x^i -> -x^i",
                "ict_chain": "a < w < v < u < b",
                "timelike": "v",
                "erratum": "the printed x^2-t^2 numerator has (1-ab)(uv+uw+vw-1); the hyperquadric identity (and the complex-slot transformation) require (ab-1)",
                "map_raw": [
                    (
                        "t^2+x^2",
                        "sqrt(u^2+1)*sqrt(v^2+1)*sqrt(w^2+1)/(sqrt(a^2+1)*sqrt(b^2+1))",
                    ),
                    (
                        "x^2-t^2",
                        "((a+b)*(u+v+w-u*v*w) + (1-a*b)*(u*v+u*w+v*w-1))/((a^2+1)*(b^2+1))",
                    ),
                    ("y^2", "(u-a)*(a-v)*(a-w)/((b-a)*(a^2+1))"),
                    ("z^2", "(b-u)*(b-v)*(b-w)/((b-a)*(b^2+1))"),
                ],
                "map": [
                    (
                        "t^2+x^2",
                        "sqrt(u^2+1)*sqrt(v^2+1)*sqrt(w^2+1)/(sqrt(a^2+1)*sqrt(b^2+1))",
                    ),
                    (
                        "x^2-t^2",
                        "((a+b)*(u+v+w-u*v*w) + (a*b-1)*(u*v+u*w+v*w-1))/((a^2+1)*(b^2+1))",
                    ),
                    ("y^2", "(u-a)*(a-v)*(a-w)/((b-a)*(a^2+1))"),
                    ("z^2", "(b-u)*(b-v)*(b-w)/((b-a)*(b^2+1))"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*(u^2+1)*(u-a)*(b-u))",
                    "(u-v)*(v-w)/(4*(v^2+1)*(v-a)*(v-b))",
                    "(u-w)*(v-w)/(4*(w^2+1)*(w-a)*(b-w))",
                ),
            },
        ],
    },
    {
        "id": "dS-22",
        "name": "Parabolically-embedded translational web",
        "section": "4.13",
        "form": [(2, 1, "0"), (1, 1, "0"), (1, 1, "0")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [
                    ("u", "-inf", "inf"),
                    ("v", "-inf", "inf"),
                    ("w", "-inf", "inf"),
                ],
                "region": "t+x > 0",
                "map": [
                    ("t-x", "-exp(-u) + exp(u)*(v^2 + w^2)"),
                    ("t+x", "exp(u)"),
                    ("y", "exp(u)*v"),
                    ("z", "exp(u)*w"),
                ],
                "metric": ("-1", "exp(2*u)", "exp(2*u)"),
            }
        ],
    },
    {
        "id": "dS-23",
        "name": "Parabolically-embedded polar web",
        "section": "4.13",
        "form": [(2, 1, "0"), (1, 1, "0"), (1, 1, "0")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [("u", "-inf", "inf"), ("v", "0", "inf"), ("w", "0", "2*pi")],
                "region": "t+x > 0",
                "erratum": "printed z = e^u cos(w) omits the radial factor v; the embedding identity forces z = e^u v cos(w)",
                "map_raw": [
                    ("t-x", "-exp(-u) + exp(u)*v^2"),
                    ("t+x", "exp(u)"),
                    ("y", "exp(u)*v*sin(w)"),
                    ("z", "exp(u)*cos(w)"),
                ],
                "map": [
                    ("t-x", "-exp(-u) + exp(u)*v^2"),
                    ("t+x", "exp(u)"),
                    ("y", "exp(u)*v*sin(w)"),
                    ("z", "exp(u)*v*cos(w)"),
                ],
                "metric": ("-1", "exp(2*u)", "exp(2*u)*v^2"),
            }
        ],
    },
    {
        "id": "dS-24",
        "name": "Parabolically-embedded elliptic web",
        "section": "4.13",
        "form": [(2, 1, "0"), (1, 1, "0"), (1, 1, "0")],
        "params": {"a": 0.6},
        "constraint": "apos",
        "charts": [
            {
                "ranges": [("u", "-inf", "inf"), ("v", "0", "inf"), ("w", "0", "2*pi")],
                "region": "t+x > 0",
                "map": [
                    ("t-x", "-exp(-u) + a^2*exp(u)*(cosh(v)^2 - sin(w)^2)"),
                    ("t+x", "exp(u)"),
                    ("y", "a*exp(u)*cosh(v)*cos(w)"),
                    ("z", "a*exp(u)*sinh(v)*sin(w)"),
                ],
                "metric": (
                    "-1",
                    "a^2*exp(2*u)*(cosh(v)^2 - cos(w)^2)",
                    "a^2*exp(2*u)*(cosh(v)^2 - cos(w)^2)",
                ),
            }
        ],
    },
    {
        "id": "dS-25",
        "name": "Parabolically-embedded parabolic web",
        "section": "4.13",
        "form": [(2, 1, "0"), (1, 1, "0"), (1, 1, "0")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [("u", "-inf", "inf"), ("v", "0", "inf"), ("w", "0", "2*pi")],
                "region": "t+x > 0",
                "map": [
                    ("t-x", "-exp(-u) + exp(u)*(v^2 + w^2)^2/4"),
                    ("t+x", "exp(u)"),
                    ("y", "exp(u)*(v^2 - w^2)/2"),
                    ("z", "exp(u)*v*w"),
                ],
                "metric": (
                    "-1",
                    "exp(2*u)*(v^2 + w^2)",
                    "exp(2*u)*(v^2 + w^2)",
                ),
            }
        ],
    },
    {
        "id": "dS-26",
        "name": "Null rotational web II",
        "section": "4.14",
        "form": [(2, 1, "0"), (1, 1, "0"), (1, 1, "1")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [
                    ("u", "-inf", "inf"),
                    ("v", "0", "inf"),
                    ("w", "-inf", "inf"),
                ],
                "region": "t+x > 0",
                "erratum": "printed t-x adds cosh(u) sinh(v)(1 - tanh^2 u coth^2 v); the hyperquadric identity requires the second term with a minus sign (as in the rotational lift of the same web)",
                "map_raw": [
                    (
                        "t-x",
                        "w^2*sech(u)*csch(v) + cosh(u)*sinh(v)*(1 - tanh(u)^2*coth(v)^2)",
                    ),
                    ("t+x", "sech(u)*csch(v)"),
                    ("y", "w*sech(u)*csch(v)"),
                    ("z", "tanh(u)*coth(v)"),
                ],
                "map": [
                    (
                        "t-x",
                        "w^2*sech(u)*csch(v) - cosh(u)*sinh(v)*(1 - tanh(u)^2*coth(v)^2)",
                    ),
                    ("t+x", "sech(u)*csch(v)"),
                    ("y", "w*sech(u)*csch(v)"),
                    ("z", "tanh(u)*coth(v)"),
                ],
                "metric": (
                    "sech(u)^2 + csch(v)^2",
                    "-(sech(u)^2 + csch(v)^2)",
                    "sech(u)^2*csch(v)^2",
                ),
            }
        ],
    },
    {
        "id": "dS-27",
        "name": "Null rotational web II",
        "section": "4.15",
        "form": [(2, 1, "0"), (1, 1, "0"), (1, 1, "-1")],
        "params": {},
        "constraint": None,
        "note": "printed title repeats dS-26's; ids are the primary key",
        "charts": [
            {
                "ranges": [("u", "0", "pi/2"), ("v", "0", "u"), ("w", "-inf", "inf")],
                "region": "abs(2*x*(t+x) + y^2) > 2*(t+x) and (t+x)^2 > abs(1 - z^2)",
                "map": [
                    (
                        "t-x",
                        "w^2*sec(u)*sec(v) - cos(u)*cos(v)*(1 - tan(u)^2*tan(v)^2)",
                    ),
                    ("t+x", "sec(u)*sec(v)"),
                    ("y", "w*sec(u)*sec(v)"),
                    ("z", "tan(u)*tan(v)"),
                ],
                "erratum": "the printed bracket sec^2 u + sec^2 v disagrees with the induced metric, which carries sec^2 u - sec^2 v",
                "metric_raw": (
                    "-(sec(u)^2 + sec(v)^2)",
                    "sec(u)^2 + sec(v)^2",
                    "sec(u)^2*sec(v)^2",
                ),
                "metric": (
                    "-(sec(u)^2 - sec(v)^2)",
                    "sec(u)^2 - sec(v)^2",
                    "sec(u)^2*sec(v)^2",
                ),
            },
            {
                "ranges": [("u", "0", "inf"), ("v", "0", "u"), ("w", "-inf", "inf")],
                "region": "abs(2*x*(t+x) + y^2) > 2*(t+x) and (t+x)^2 < abs(1 - z^2) and abs(z) > 1",
                "map": [
                    (
                        "t-x",
                        "w^2*csch(u)*csch(v) - sinh(u)*sinh(v)*(1 - coth(u)^2*coth(v)^2)",
                    ),
                    ("t+x", "csch(u)*csch(v)"),
                    ("y", "w*csch(u)*csch(v)"),
                    ("z", "coth(u)*coth(v)"),
                ],
                "erratum": "the printed bracket csch^2 v + csch^2 u disagrees with the induced metric, which carries csch^2 v - csch^2 u",
                "metric_raw": (
                    "csch(v)^2 + csch(u)^2",
                    "-(csch(v)^2 + csch(u)^2)",
                    "csch(u)^2*csch(v)^2",
                ),
                "metric": (
                    "csch(v)^2 - csch(u)^2",
                    "-(csch(v)^2 - csch(u)^2)",
                    "csch(u)^2*csch(v)^2",
                ),
            },
            {
                "ranges": [("u", "0", "inf"), ("v", "0", "u"), ("w", "-inf", "inf")],
                "region": "abs(2*x*(t+x) + y^2) > 2*(t+x) and (t+x)^2 < abs(1 - z^2) and abs(z) < 1",
                "map": [
                    (
                        "t-x",
                        "w^2*sech(u)*sech(v) - cosh(u)*cosh(v)*(1 - tanh(u)^2*tanh(v)^2)",
                    ),
                    ("t+x", "sech(u)*sech(v)"),
                    ("y", "w*sech(u)*sech(v)"),
                    ("z", "tanh(u)*tanh(v)"),
                ],
                "metric": (
                    "sech(u)^2 - sech(v)^2",
                    "-(sech(u)^2 - sech(v)^2)",
                    "sech(u)^2*sech(v)^2",
                ),
            },
        ],
    },
    {
        "id": "dS-28",
        "name": "Spacelike rotational web VII",
        "section": "4.16",
        "form": [(2, 1, "0"), (1, 1, "1"), (1, 1, "1")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [("u", "0", "inf"), ("v", "0", "inf"), ("w", "0", "2*pi")],
                "region": "t+x > 0 and y^2+z^2 > 0",
                "map": [
                    ("t-x", "-cosh(u)*sinh(v)*(1 - tanh(u)^2*coth(v)^2)"),
                    ("t+x", "sech(u)*csch(v)"),
                    ("y", "tanh(u)*coth(v)*sin(w)"),
                    ("z", "tanh(u)*coth(v)*cos(w)"),
                ],
                "metric": (
                    "sech(u)^2 + csch(v)^2",
                    "-(sech(u)^2 + csch(v)^2)",
                    "tanh(u)^2*coth(v)^2",
                ),
            }
        ],
    },
    {
        "id": "dS-29",
        "name": "Spacelike rotational web VIII",
        "section": "4.17",
        "form": [(2, 1, "0"), (1, 1, "-1"), (1, 1, "-1")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [("u", "0", "pi/2"), ("v", "0", "u"), ("w", "0", "pi/2")],
                "region": "abs(x) > 1 and t*x > 0",
                "map": [
                    ("t-x", "-cos(u)*cos(v)*(1 - tan(u)^2*tan(v)^2)"),
                    ("t+x", "sec(u)*sec(v)"),
                    ("y", "tan(u)*tan(v)*sin(w)"),
                    ("z", "tan(u)*tan(v)*cos(w)"),
                ],
                "erratum": "the printed bracket sec^2 u + sec^2 v disagrees with the induced metric, which carries sec^2 u - sec^2 v",
                "metric_raw": (
                    "-(sec(u)^2 + sec(v)^2)",
                    "sec(u)^2 + sec(v)^2",
                    "tan(u)^2*tan(v)^2",
                ),
                "metric": (
                    "-(sec(u)^2 - sec(v)^2)",
                    "sec(u)^2 - sec(v)^2",
                    "tan(u)^2*tan(v)^2",
                ),
            },
            {
                "ranges": [("u", "0", "inf"), ("v", "0", "u"), ("w", "0", "2*pi")],
                "region": "abs(x) > 1 and t*x < 0 and y^2+z^2 > 1",
                "map": [
                    ("t-x", "-sinh(u)*sinh(v)*(1 - coth(u)^2*coth(v)^2)"),
                    ("t+x", "csch(u)*csch(v)"),
                    ("y", "coth(u)*coth(v)*sin(w)"),
                    ("z", "coth(u)*coth(v)*cos(w)"),
                ],
                "erratum": "the printed bracket csch^2 v + csch^2 u disagrees with the induced metric, which carries csch^2 v - csch^2 u",
                "metric_raw": (
                    "csch(v)^2 + csch(u)^2",
                    "-(csch(v)^2 + csch(u)^2)",
                    "coth(u)^2*coth(v)^2",
                ),
                "metric": (
                    "csch(v)^2 - csch(u)^2",
                    "-(csch(v)^2 - csch(u)^2)",
                    "coth(u)^2*coth(v)^2",
                ),
            },
            {
                "ranges": [("u", "0", "inf"), ("v", "0", "u"), ("w", "0", "2*pi")],
                "region": "abs(x) > 1 and t*x < 0 and y^2+z^2 < 1",
                "map": [
                    ("t-x", "-cosh(u)*cosh(v)*(1 - tanh(u)^2*tanh(v)^2)"),
                    ("t+x", "sech(u)*sech(v)"),
                    ("y", "tanh(u)*tanh(v)*sin(w)"),
                    ("z", "tanh(u)*tanh(v)*cos(w)"),
                ],
                "metric": (
                    "sech(u)^2 - sech(v)^2",
                    "-(sech(u)^2 - sech(v)^2)",
                    "tanh(u)^2*tanh(v)^2",
                ),
            },
        ],
    },
    {
        "id": "dS-30",
        "name": "Null ellipsoidal web I",
        "section": "4.18",
        "form": [(2, 1, "0"), (1, 1, "a"), (1, 1, "1")],
        "params": {"a": 0.45},
        "constraint": "unit",
        "ict": {"k": 2, "diag": [("y", "a", 1), ("z", "1", 1)]},
        "charts": [
            {
                "ranges": [("u", "a", "1"), ("v", "0", "a"), ("w", "-inf", "0")],
                "region": "t+x > 0 and y > 0 and z > 0",
                "branch_note": "t+x, y, z > 0 branch; other sheets via x^i -> -x^i",
                "ict_chain": "w < 0 < v < a < u < 1",
                "timelike": "w",
                "map": [
                    ("(t+x)^2", "-u*v*w/a"),
                    ("-t^2+x^2", "(a*(u*v + u*w + v*w) - (1+a)*u*v*w)/a^2"),
                    ("y^2", "(u-a)*(v-a)*(w-a)/(a^2*(1-a))"),
                    ("z^2", "(1-u)*(1-v)*(1-w)/(1-a)"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*u^2*(u-a)*(1-u))",
                    "(u-v)*(v-w)/(4*v^2*(a-v)*(1-v))",
                    "-(u-w)*(v-w)/(4*w^2*(a-w)*(1-w))",
                ),
            }
        ],
    },
    {
        "id": "dS-31",
        "name": "Null ellipsoidal web II",
        "section": "4.19",
        "form": [(2, 1, "0"), (1, 1, "a"), (1, 1, "-1")],
        "params": {"a": 0.6},
        "constraint": "apos",
        "ict": {"k": 2, "diag": [("y", "a", 1), ("z", "-1", 1)]},
        "charts": [
            {
                "ranges": [("u", "0", "a"), ("v", "-inf", "-1"), ("w", "-inf", "v")],
                "region": "t+x > 0 and y > 0 and z > 0",
                "branch_note": "t+x, y, z > 0 branch; other sheets via x^i -> -x^i",
                "ict_chain": "w < v < -1 < 0 < u < a",
                "timelike": "w",
                "map": [
                    ("(t+x)^2", "u*v*w/a"),
                    ("-t^2+x^2", "-(a*(u*v + u*w + v*w) + (a-1)*u*v*w)/a^2"),
                    ("y^2", "(a-u)*(a-v)*(a-w)/(a^2*(1+a))"),
                    ("z^2", "(u+1)*(v+1)*(w+1)/(1+a)"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*u^2*(a-u)*(u+1))",
                    "(u-v)*(v-w)/(4*v^2*(v-a)*(v+1))",
                    "(u-w)*(v-w)/(4*w^2*(a-w)*(w+1))",
                ),
            },
            {
                "ranges": [("u", "0", "a"), ("w", "-1", "0"), ("v", "w", "0")],
                "region": "t+x > 0 and y > 0 and z > 0",
                "branch_note": "t+x, y, z > 0 branch; other sheets via x^i -> -x^i",
                "ict_chain": "-1 < w < v < 0 < u < a",
                "timelike": "v",
                "map": [
                    ("(t+x)^2", "u*v*w/a"),
                    ("-t^2+x^2", "-(a*(u*v + u*w + v*w) + (a-1)*u*v*w)/a^2"),
                    ("y^2", "(a-u)*(a-v)*(a-w)/(a^2*(1+a))"),
                    ("z^2", "(u+1)*(v+1)*(w+1)/(1+a)"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*u^2*(a-u)*(u+1))",
                    "(u-v)*(v-w)/(4*v^2*(v-a)*(v+1))",
                    "(u-w)*(v-w)/(4*w^2*(a-w)*(w+1))",
                ),
            },
            {
                "ranges": [("w", "0", "a"), ("v", "w", "a"), ("u", "v", "a")],
                "region": "t+x > 0 and y > 0 and z > 0",
                "branch_note": "t+x, y, z > 0 branch; other sheets via x^i -> -x^i",
                "ict_chain": "-1 < 0 < w < v < u < a",
                "timelike": "v",
                "map": [
                    ("(t+x)^2", "u*v*w/a"),
                    ("-t^2+x^2", "-(a*(u*v + u*w + v*w) + (a-1)*u*v*w)/a^2"),
                    ("y^2", "(a-u)*(a-v)*(a-w)/(a^2*(1+a))"),
                    ("z^2", "(u+1)*(v+1)*(w+1)/(1+a)"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*u^2*(a-u)*(u+1))",
                    "(u-v)*(v-w)/(4*v^2*(v-a)*(v+1))",
                    "(u-w)*(v-w)/(4*w^2*(a-w)*(w+1))",
                ),
            },
            {
                "ranges": [("w", "0", "a"), ("v", "a", "inf"), ("u", "v", "inf")],
                "region": "t+x > 0 and y > 0 and z > 0",
                "branch_note": "t+x, y, z > 0 branch; other sheets via x^i -> -x^i",
                "ict_chain": "-1 < 0 < w < a < v < u",
                "timelike": "u",
                "map": [
                    ("(t+x)^2", "u*v*w/a"),
                    ("-t^2+x^2", "-(a*(u*v + u*w + v*w) + (a-1)*u*v*w)/a^2"),
                    ("y^2", "(a-u)*(a-v)*(a-w)/(a^2*(1+a))"),
                    ("z^2", "(u+1)*(v+1)*(w+1)/(1+a)"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*u^2*(a-u)*(u+1))",
                    "(u-v)*(v-w)/(4*v^2*(v-a)*(v+1))",
                    "(u-w)*(v-w)/(4*w^2*(a-w)*(w+1))",
                ),
            },
        ],
    },
    {
        "id": "dS-32",
        "name": "Null ellipsoidal web III",
        "section": "4.20",
        "form": [(2, 1, "0"), (1, 1, "-a"), (1, 1, "-1")],
        "params": {"a": 0.6},
        "constraint": "unit",
        "ict": {"k": 2, "diag": [("y", "-a", 1), ("z", "-1", 1)]},
        "charts": [
            {
                "ranges": [("u", "-1", "-a"), ("v", "-inf", "-1"), ("w", "-inf", "v")],
                "region": "t+x > 0 and y > 0 and z > 0",
                "branch_note": "t+x, y, z > 0 branch; other sheets via x^i -> -x^i",
                "ict_chain": "w < v < -1 < u < -a < 0",
                "timelike": "w",
                "map": [
                    ("(t+x)^2", "-u*v*w/a"),
                    ("-t^2+x^2", "(a*(u*v + u*w + v*w) + (1+a)*u*v*w)/a^2"),
                    ("y^2", "-(u+a)*(v+a)*(w+a)/(a^2*(1-a))"),
                    ("z^2", "(u+1)*(v+1)*(w+1)/(1-a)"),
                ],
                "metric": (
                    "-(u-v)*(u-w)/(4*u^2*(u+a)*(u+1))",
                    "(u-v)*(v-w)/(4*v^2*(v+a)*(v+1))",
                    "-(u-w)*(v-w)/(4*w^2*(w+a)*(w+1))",
                ),
            },
            {
                "ranges": [("w", "-1", "-a"), ("v", "w", "-a"), ("u", "v", "-a")],
                "region": "t+x > 0 and y > 0 and z > 0",
                "branch_note": "t+x, y, z > 0 branch; other sheets via x^i -> -x^i",
                "ict_chain": "-1 < w < v < u < -a < 0",
                "timelike": "v",
                "map": [
                    ("(t+x)^2", "-u*v*w/a"),
                    ("-t^2+x^2", "(a*(u*v + u*w + v*w) + (1+a)*u*v*w)/a^2"),
                    ("y^2", "-(u+a)*(v+a)*(w+a)/(a^2*(1-a))"),
                    ("z^2", "(u+1)*(v+1)*(w+1)/(1-a)"),
                ],
                "metric": (
                    "-(u-v)*(u-w)/(4*u^2*(u+a)*(u+1))",
                    "(u-v)*(v-w)/(4*v^2*(v+a)*(v+1))",
                    "-(u-w)*(v-w)/(4*w^2*(w+a)*(w+1))",
                ),
            },
            {
                "ranges": [("w", "-1", "-a"), ("v", "-a", "0"), ("u", "v", "0")],
                "region": "t+x > 0 and y > 0 and z > 0",
                "branch_note": "t+x, y, z > 0 branch; other sheets via x^i -> -x^i",
                "ict_chain": "-1 < w < -a < v < u < 0",
                "timelike": "u",
                "map": [
                    ("(t+x)^2", "-u*v*w/a"),
                    ("-t^2+x^2", "(a*(u*v + u*w + v*w) + (1+a)*u*v*w)/a^2"),
                    ("y^2", "-(u+a)*(v+a)*(w+a)/(a^2*(1-a))"),
                    ("z^2", "(u+1)*(v+1)*(w+1)/(1-a)"),
                ],
                "metric": (
                    "-(u-v)*(u-w)/(4*u^2*(u+a)*(u+1))",
                    "(u-v)*(v-w)/(4*v^2*(v+a)*(v+1))",
                    "-(u-w)*(v-w)/(4*w^2*(w+a)*(w+1))",
                ),
            },
        ],
    },
    {
        "id": "dS-33",
        "name": "Null rotational web III",
        "section": "4.21",
        "form": [(3, 1, "0"), (1, 1, "0")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "ranges": [("v", "0", "inf"), ("u", "0", "v"), ("w", "-inf", "inf")],
                "region": "t+x > 0",
                "map": [
                    ("t-x", "(u^2 - v^2)^2/(4*u*v) + w^2/(u*v)"),
                    ("t+x", "1/(u*v)"),
                    ("y", "(u^2 + v^2)/(2*u*v)"),
                    ("z", "w/(u*v)"),
                ],
                "metric": ("-(u^-2 - v^-2)", "u^-2 - v^-2", "u^-2*v^-2"),
            }
        ],
    },
    {
        "id": "dS-34",
        "name": "Null ellipsoidal web IV",
        "section": "4.22",
        "form": [(3, 1, "0"), (1, 1, "a")],
        "params": {"a": 0.6},
        "constraint": "apos",
        "ict": {"k": 3, "diag": [("z", "a", 1)]},
        "charts": [
            {
                "ranges": [("u", "0", "a"), ("v", "-inf", "0"), ("w", "-inf", "v")],
                "region": "t+x > 0 and z > 0",
                "branch_note": "t+x, z > 0 branch; other sheets via x^i -> -x^i",
                "ict_chain": "w < v < 0 < u < a",
                "timelike": "w",
                "erratum": "printed z^2 = (a-u)(a-u)(a-u)/a^3 repeats the u factor; symmetry and the transformation theory give (a-u)(a-v)(a-w)/a^3",
                "map_raw": [
                    ("(t+x)^2", "u*v*w/a"),
                    (
                        "-t^2+x^2+y^2",
                        "(u+v+w)/a - (u*v + u*w + v*w)/a^2 + u*v*w/a^3",
                    ),
                    ("(t+x)*y", "-(u*v + u*w + v*w)/(2*a) + u*v*w/(2*a^2)"),
                    ("z^2", "(a-u)*(a-u)*(a-u)/a^3"),
                ],
                "map": [
                    ("(t+x)^2", "u*v*w/a"),
                    (
                        "-t^2+x^2+y^2",
                        "(u+v+w)/a - (u*v + u*w + v*w)/a^2 + u*v*w/a^3",
                    ),
                    ("(t+x)*y", "-(u*v + u*w + v*w)/(2*a) + u*v*w/(2*a^2)"),
                    ("z^2", "(a-u)*(a-v)*(a-w)/a^3"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*u^3*(a-u))",
                    "(u-v)*(v-w)/(4*v^3*(v-a))",
                    "(u-w)*(v-w)/(4*w^3*(a-w))",
                ),
            },
            {
                "ranges": [("w", "0", "a"), ("v", "w", "a"), ("u", "v", "a")],
                "region": "t+x > 0 and z > 0",
                "branch_note": "t+x, z > 0 branch; other sheets via x^i -> -x^i",
                "ict_chain": "0 < w < v < u < a",
                "timelike": "v",
                "erratum": "printed z^2 = (a-u)(a-u)(a-u)/a^3 repeats the u factor; symmetry and the transformation theory give (a-u)(a-v)(a-w)/a^3",
                "map_raw": [
                    ("(t+x)^2", "u*v*w/a"),
                    (
                        "-t^2+x^2+y^2",
                        "(u+v+w)/a - (u*v + u*w + v*w)/a^2 + u*v*w/a^3",
                    ),
                    ("(t+x)*y", "-(u*v + u*w + v*w)/(2*a) + u*v*w/(2*a^2)"),
                    ("z^2", "(a-u)*(a-u)*(a-u)/a^3"),
                ],
                "map": [
                    ("(t+x)^2", "u*v*w/a"),
                    (
                        "-t^2+x^2+y^2",
                        "(u+v+w)/a - (u*v + u*w + v*w)/a^2 + u*v*w/a^3",
                    ),
                    ("(t+x)*y", "-(u*v + u*w + v*w)/(2*a) + u*v*w/(2*a^2)"),
                    ("z^2", "(a-u)*(a-v)*(a-w)/a^3"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*u^3*(a-u))",
                    "(u-v)*(v-w)/(4*v^3*(v-a))",
                    "(u-w)*(v-w)/(4*w^3*(a-w))",
                ),
            },
            {
                "ranges": [("w", "0", "a"), ("v", "a", "inf"), ("u", "v", "inf")],
                "region": "t+x > 0 and z > 0",
                "branch_note": "t+x, z > 0 branch; other sheets via x^i -> -x^i",
                "ict_chain": "0 < w < a < v < u",
                "timelike": "u",
                "erratum": "printed z^2 = (a-u)(a-u)(a-u)/a^3 repeats the u factor; symmetry and the transformation theory give (a-u)(a-v)(a-w)/a^3",
                "map_raw": [
                    ("(t+x)^2", "u*v*w/a"),
                    (
                        "-t^2+x^2+y^2",
                        "(u+v+w)/a - (u*v + u*w + v*w)/a^2 + u*v*w/a^3",
                    ),
                    ("(t+x)*y", "-(u*v + u*w + v*w)/(2*a) + u*v*w/(2*a^2)"),
                    ("z^2", "(a-u)*(a-u)*(a-u)/a^3"),
                ],
                "map": [
                    ("(t+x)^2", "u*v*w/a"),
                    (
                        "-t^2+x^2+y^2",
                        "(u+v+w)/a - (u*v + u*w + v*w)/a^2 + u*v*w/a^3",
                    ),
                    ("(t+x)*y", "-(u*v + u*w + v*w)/(2*a) + u*v*w/(2*a^2)"),
                    ("z^2", "(a-u)*(a-v)*(a-w)/a^3"),
                ],
                "metric": (
                    "(u-v)*(u-w)/(4*u^3*(a-u))",
                    "(u-v)*(v-w)/(4*v^3*(v-a))",
                    "(u-w)*(v-w)/(4*w^3*(a-w))",
                ),
            },
        ],
    },
]


H2_WEBS = [
    {
        "id": "H2-1",
        "name": "Elliptic web I",
        "section": "B.1",
        "form": [(1, -1, "0"), (1, 1, "a^2"), (1, 1, "1")],
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "charts": [
            {
                "coords": ("v", "w"),
                "ranges": [("v", "0", "K(a)"), ("w", "0", "K(b)")],
                "region": "t > 0",
                "map": [
                    ("t", "nd(v;a)*ns(w;b)"),
                    ("x", "sd(v;a)*ds(w;b)"),
                    ("y", "cd(v;a)*cs(w;b)"),
                ],
                "metric": (
                    "a^2*cd(v;a)^2 + cs(w;b)^2",
                    "a^2*cd(v;a)^2 + cs(w;b)^2",
                ),
            }
        ],
    },
    {
        "id": "H2-2",
        "name": "Elliptic web II",
        "section": "B.2",
        "form": [(1, -1, "a^2"), (1, 1, "0"), (1, 1, "1")],
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "charts": [
            {
                "coords": ("v", "w"),
                "ranges": [("v", "0", "K(a)"), ("w", "0", "K(b)")],
                "region": "t > 0",
                "map": [
                    ("t", "nc(v;a)*nc(w;b)"),
                    ("x", "sac(v;a)*dc(w;b)"),
                    ("y", "dc(v;a)*sac(w;b)"),
                ],
                "metric": (
                    "dc(v;a)^2 + a^2*sac(w;b)^2",
                    "dc(v;a)^2 + a^2*sac(w;b)^2",
                ),
            }
        ],
    },
    {
        "id": "H2-3",
        "name": "Spacelike rotational web",
        "section": "B.3",
        "form": [(1, -1, "1"), (1, 1, "0"), (1, 1, "0")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "coords": ("v", "w"),
                "ranges": [("v", "0", "inf"), ("w", "0", "2*pi")],
                "region": "t > 0",
                "map": [
                    ("t", "cosh(v)"),
                    ("x", "sinh(v)*cos(w)"),
                    ("y", "sinh(v)*sin(w)"),
                ],
                "metric": ("1", "sinh(v)^2"),
            }
        ],
    },
    {
        "id": "H2-4",
        "name": "Timelike rotational web",
        "section": "B.4",
        "form": [(1, -1, "0"), (1, 1, "0"), (1, 1, "1")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "coords": ("v", "w"),
                "ranges": [("v", "-inf", "inf"), ("w", "-inf", "inf")],
                "region": "t > 0",
                "map": [
                    ("t", "cosh(v)*cosh(w)"),
                    ("x", "cosh(v)*sinh(w)"),
                    ("y", "sinh(v)"),
                ],
                "metric": ("1", "cosh(v)^2"),
            }
        ],
    },
    {
        "id": "H2-5",
        "name": "Complex elliptic web",
        "section": "B.5",
        "form": [("complex", "0", "1"), (1, 1, "0")],
        "params": {"a": 0.6},
        "constraint": "a2b2",
        "note": "the free parameter c of this web is not visible in the chart; classification normalizes it",
        "charts": [
            {
                "coords": ("v", "w"),
                "ranges": [("v", "0", "K(a)"), ("w", "0", "K(b)")],
                "region": "t > 0 and x > 0",
                "branch_note": "t, x >= 0 sheet; others via t -> -t, x -> -x",
                "map": [
                    (
                        "t^2+x^2",
                        "2*dn(2*v;a)*dn(2*w;b)/(a*b*(1+cn(2*v;a))*(1+cn(2*w;b)))",
                    ),
                    (
                        "t^2-x^2",
                        "2*(1+cn(2*v;a)*cn(2*w;b))/((1+cn(2*v;a))*(1+cn(2*w;b)))",
                    ),
                    ("y", "sn(v;a)*dc(v;a)*sn(w;b)*dc(w;b)"),
                ],
                "metric": (
                    "sn(v;a)^2*dc(v;a)^2 + sn(w;b)^2*dc(w;b)^2",
                    "sn(v;a)^2*dc(v;a)^2 + sn(w;b)^2*dc(w;b)^2",
                ),
            }
        ],
    },
    {
        "id": "H2-6",
        "name": "Null elliptic web I",
        "section": "B.6",
        "form": [(2, 1, "0"), (1, 1, "1")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "coords": ("v", "w"),
                "ranges": [("v", "0", "pi/2"), ("w", "0", "inf")],
                "region": "t+x > 0 and t > 0",
                "map": [
                    ("t+x", "sec(v)*sech(w)"),
                    ("t-x", "cos(v)*cosh(w)*(1 + tan(v)^2*tanh(w)^2)"),
                    ("y", "tan(v)*tanh(w)"),
                ],
                "metric": (
                    "sec(v)^2 - sech(w)^2",
                    "sec(v)^2 - sech(w)^2",
                ),
            }
        ],
    },
    {
        "id": "H2-7",
        "name": "Null elliptic web II",
        "section": "B.7",
        "form": [(2, 1, "0"), (1, 1, "-1")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "coords": ("v", "w"),
                "ranges": [("v", "0", "inf"), ("w", "0", "pi/2")],
                "region": "t+x > 0 and t > 0",
                "erratum": "the printed metric line carries a stray du^2 + cosh^2 u factor copied from the three-dimensional lift; the web is two-dimensional",
                "metric_raw": (
                    "1 + cosh(1)^2*(csch(v)^2 + sec(w)^2)",
                    "cosh(1)^2*(csch(v)^2 + sec(w)^2)",
                ),
                "map": [
                    ("t+x", "csch(v)*sec(w)"),
                    ("t-x", "sinh(v)*cos(w)*(1 + coth(v)^2*tan(w)^2)"),
                    ("y", "coth(v)*tan(w)"),
                ],
                "metric": (
                    "csch(v)^2 + sec(w)^2",
                    "csch(v)^2 + sec(w)^2",
                ),
            }
        ],
    },
    {
        "id": "H2-8",
        "name": "Null rotational web",
        "section": "B.8",
        "form": [(2, 1, "0"), (1, 1, "0")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "coords": ("v", "w"),
                "ranges": [("v", "-inf", "inf"), ("w", "-inf", "inf")],
                "region": "t+x > 0 and t > 0",
                "erratum": "printed y = cosh(u) w e^v carries a stray cosh(u) factor from the three-dimensional lift; the web is two-dimensional",
                "map_raw": [
                    ("t+x", "exp(v)"),
                    ("t-x", "exp(-v) + w^2*exp(v)"),
                    ("y", "cosh(1)*w*exp(v)"),
                ],
                "map": [
                    ("t+x", "exp(v)"),
                    ("t-x", "exp(-v) + w^2*exp(v)"),
                    ("y", "w*exp(v)"),
                ],
                "metric": ("1", "exp(2*v)"),
            }
        ],
    },
    {
        "id": "H2-9",
        "name": "Null elliptic web III",
        "section": "B.9",
        "form": [(3, 1, "0")],
        "params": {},
        "constraint": None,
        "charts": [
            {
                "coords": ("v", "w"),
                "ranges": [("v", "0", "inf"), ("w", "0", "inf")],
                "region": "t+x > 0 and t > 0",
                "map": [
                    ("t+x", "1/(v*w)"),
                    ("t-x", "(v^2 + w^2)^2/(4*v*w)"),
                    ("y", "(w^2 - v^2)/(2*v*w)"),
                ],
                "metric": ("v^-2 + w^-2", "v^-2 + w^-2"),
            }
        ],
    },
]

ALL_WEBS = {"H3": H3_WEBS, "dS3": DS3_WEBS, "H2": H2_WEBS}
