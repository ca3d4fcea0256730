//! Checks of closed forms and bounds for fractional and integral
//! (co)coloring. Every check returns a [`TheoremReport`]; solver
//! errors such as capability limits are passed through as `Err`.

use super::integral::{integral_chi, integral_z};
use super::report::{TheoremReport, Verdict};
use crate::error::Result;
use crate::graph::{gen_kneser, gen_mycielski, gen_star, stats, Graph};
use crate::rational::{self, int, Rational};
use crate::solver::{chi_f, z_f};

fn show(r: &Rational) -> String {
    rational::to_string(r)
}

/// Stars with optional isolated vertices: `2 - 1/t` without isolated
/// vertices, `2 - 1/(t+1)` with.
pub fn check_example1(t: usize, s: usize) -> Result<TheoremReport> {
    let g = gen_star(t, s)?;
    let z = z_f(&g)?.value;
    let expected = star_z_f(t, s);
    Ok(TheoremReport::new("example1", &g)
        .value("t", t)
        .value("s", s)
        .rational("z_f", &z)
        .rational("expected", &expected)
        .expect(z == expected, || {
            format!(
                "z_f = {} but the closed form gives {}",
                show(&z),
                show(&expected)
            )
        }))
}

/// Closed-form `Z_f` of a star with `t` leaves and `s` isolated vertices.
pub fn star_z_f(t: usize, s: usize) -> Rational {
    let d = if s == 0 { t } else { t + 1 };
    int(2) - Rational::new(1.into(), (d as i64).into())
}

/// `Z_f >= n / max(alpha, omega)`, with equality for vertex-transitive
/// generators.
pub fn check_proposition1(g: &Graph) -> Result<TheoremReport> {
    let report = TheoremReport::new("prop1", g);
    if g.n() == 0 {
        return Ok(report.not_applicable("empty graph"));
    }
    let st = stats(g)?;
    let k = st.alpha.max(st.omega);
    let bound = Rational::new((g.n() as i64).into(), (k as i64).into());
    let z = z_f(g)?.value;
    let report = report
        .value("alpha", st.alpha)
        .value("omega", st.omega)
        .rational("bound", &bound)
        .rational("z_f", &z)
        .value("transitive", g.is_transitive())
        .value("equality", z == bound);
    let result = if z < bound {
        report.verdict(Verdict::Fails {
            reason: format!("z_f = {} below n/k = {}", show(&z), show(&bound)),
        })
    } else if g.is_transitive() && z != bound {
        report.verdict(Verdict::Fails {
            reason: format!(
                "vertex-transitive graph with z_f = {} != n/k = {}",
                show(&z),
                show(&bound)
            ),
        })
    } else {
        report.verdict(Verdict::Holds)
    };
    Ok(result)
}

/// `Z_f(kG) = chi_f(kG) = chi_f(G)` whenever `k >= omega(G)`.
pub fn check_theorem5(g: &Graph, k: usize) -> Result<TheoremReport> {
    let st = stats(g)?;
    let report = TheoremReport::new("thm5", g)
        .value("k", k)
        .value("omega", st.omega);
    if k < st.omega || k == 0 {
        return Ok(report.not_applicable(format!("k = {k} is below omega = {}", st.omega)));
    }
    let kg = g.disjoint_union(k)?;
    let chi = chi_f(g)?.value;
    let chi_k = chi_f(&kg)?.value;
    let z_k = z_f(&kg)?.value;
    let ok = chi == chi_k && chi_k == z_k;
    Ok(report
        .rational("chi_f", &chi)
        .rational("chi_f_kG", &chi_k)
        .rational("z_f_kG", &z_k)
        .expect(ok, || {
            format!(
                "chi_f(G) = {}, chi_f(kG) = {}, z_f(kG) = {}",
                show(&chi),
                show(&chi_k),
                show(&z_k)
            )
        }))
}

/// If every edge shares one endpoint (and there is at least one edge),
/// returns `(t, s)`: the number of leaves and of remaining vertices.
pub fn star_shape(g: &Graph) -> Option<(usize, usize)> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let &(a, b) = edges.first()?;
    let centre = if edges.iter().all(|&(u, v)| u == a || v == a) {
        a
    } else if edges.iter().all(|&(u, v)| u == b || v == b) {
        b
    } else {
        return None;
    };
    let t = g.degree(centre);
    Some((t, g.n() - t - 1))
}

/// Triangle-free graphs have `chi_f = Z_f` unless the edges form a single
/// star, in which case `chi_f = 2` and `Z_f` takes the star value.
pub fn check_theorem6(g: &Graph) -> Result<TheoremReport> {
    let report = TheoremReport::new("thm6", g);
    if g.has_triangle() {
        return Ok(report.not_applicable("graph contains a triangle"));
    }
    let chi = chi_f(g)?.value;
    let z = z_f(g)?.value;
    let report = report.rational("chi_f", &chi).rational("z_f", &z);
    Ok(match star_shape(g) {
        Some((t, s)) => {
            let expected = star_z_f(t, s);
            let family = if s == 0 { "star" } else { "star-plus-isolated" };
            let report = report
                .value("t", t)
                .value("s", s)
                .rational("expected_z_f", &expected);
            if chi == int(2) && z == expected {
                report.verdict(Verdict::Exception {
                    family: family.into(),
                })
            } else {
                report.verdict(Verdict::Fails {
                    reason: format!(
                        "{family} with t = {t}, s = {s}: chi_f = {}, z_f = {}, expected 2 and {}",
                        show(&chi),
                        show(&z),
                        show(&expected)
                    ),
                })
            }
        }
        None => report.expect(chi == z, || {
            format!("chi_f = {} differs from z_f = {}", show(&chi), show(&z))
        }),
    })
}

/// The Mycielskian sends `chi_f = c` to `c + 1/c`.
pub fn check_mycielski(g: &Graph) -> Result<TheoremReport> {
    let report = TheoremReport::new("mycielski", g);
    if g.n() == 0 {
        return Ok(report.not_applicable("empty graph"));
    }
    let c = chi_f(g)?.value;
    let m = gen_mycielski(g);
    let cm = chi_f(&m)?.value;
    let expected = &c + c.recip();
    Ok(report
        .rational("chi_f", &c)
        .rational("chi_f_mycielskian", &cm)
        .rational("expected", &expected)
        .expect(cm == expected, || {
            format!(
                "chi_f(M(G)) = {} but c + 1/c = {}",
                show(&cm),
                show(&expected)
            )
        }))
}

/// `chi_f(K(a:b)) = a/b`, and `Z_f = 3 - 1/b` when `a = 3b - 1`.
pub fn check_kneser(a: usize, b: usize) -> Result<TheoremReport> {
    let g = gen_kneser(a, b)?;
    let report = TheoremReport::new("kneser", &g).value("a", a).value("b", b);
    if a < 2 * b {
        return Ok(report.not_applicable(format!("a = {a} < 2b = {}", 2 * b)));
    }
    let chi = chi_f(&g)?.value;
    let expected = Rational::new((a as i64).into(), (b as i64).into());
    let mut report = report
        .rational("chi_f", &chi)
        .rational("expected_chi_f", &expected);
    let mut failures = Vec::new();
    if chi != expected {
        failures.push(format!(
            "chi_f = {} != a/b = {}",
            show(&chi),
            show(&expected)
        ));
    }
    if a + 1 == 3 * b {
        let z = z_f(&g)?.value;
        let expected_z = int(3) - Rational::new(1.into(), (b as i64).into());
        report = report
            .rational("z_f", &z)
            .rational("expected_z_f", &expected_z);
        if z != expected_z {
            failures.push(format!(
                "z_f = {} != 3 - 1/b = {}",
                show(&z),
                show(&expected_z)
            ));
        }
    }
    Ok(report.expect(failures.is_empty(), || failures.join("; ")))
}

/// Integral version of the triangle-free equality: `Z = chi` unless `G = K_2`.
pub fn check_theorem3(g: &Graph) -> Result<TheoremReport> {
    let report = TheoremReport::new("thm3", g);
    if g.has_triangle() {
        return Ok(report.not_applicable("graph contains a triangle"));
    }
    if g.n() == 2 && g.m() == 1 {
        return Ok(report.verdict(Verdict::Exception {
            family: "k2".into(),
        }));
    }
    let chi = integral_chi(g)?;
    let z = integral_z(g)?;
    Ok(report
        .value("chi", chi)
        .value("z", z)
        .expect(chi == z, || format!("chi = {chi} differs from z = {z}")))
}

/// `Z(kG) = chi(kG) = chi(G)` whenever `k >= omega(G)`.
pub fn check_theorem4(g: &Graph, k: usize) -> Result<TheoremReport> {
    let st = stats(g)?;
    let report = TheoremReport::new("thm4", g)
        .value("k", k)
        .value("omega", st.omega);
    if k < st.omega || k == 0 {
        return Ok(report.not_applicable(format!("k = {k} is below omega = {}", st.omega)));
    }
    let kg = g.disjoint_union(k)?;
    let chi = integral_chi(g)?;
    let chi_k = integral_chi(&kg)?;
    let z_k = integral_z(&kg)?;
    Ok(report
        .value("chi", chi)
        .value("chi_kG", chi_k)
        .value("z_kG", z_k)
        .expect(chi == chi_k && chi_k == z_k, || {
            format!("chi(G) = {chi}, chi(kG) = {chi_k}, z(kG) = {z_k}")
        }))
}
