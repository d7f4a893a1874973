//! Structure of braces whose associated solution is square-free
//! (`λ_a(a) = a` for every `a`).

use super::{is_ideal, socle, BraceError, BraceSubset, FiniteBrace};

/// Outcome of [`theorem_square_report`]. Every boolean except
/// `alt_product_matches` is asserted true before the report is returned.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SquareReport {
    pub order: usize,
    pub two_sided: bool,
    pub nilpotency_class: usize,
    pub socle_order: usize,
    pub socle_in_center: bool,
    pub even_part_order: usize,
    pub odd_part_order: usize,
    pub parts_are_ideals: bool,
    pub odd_socle_is_center: bool,
    /// `Soc(G_e)·Z(G_o) = Soc(G)`.
    pub product_matches: bool,
    /// Whether `Z(G_e)·Soc(G_o)` also equals `Soc(G)`; recorded, not asserted.
    pub alt_product_matches: bool,
    pub powers_match_multiples: bool,
    pub inverse_is_negative: bool,
}

fn fail(what: &str) -> BraceError {
    BraceError::SquareTheorem(what.into())
}

fn socle_within(b: &FiniteBrace, part: &[bool]) -> Vec<bool> {
    let n = b.order();
    (0..n)
        .map(|a| part[a] && (0..n).filter(|&x| part[x]).all(|x| b.lambda(a, x) == x))
        .collect()
}

fn center_within(b: &FiniteBrace, part: &[bool]) -> Vec<bool> {
    let n = b.order();
    (0..n)
        .map(|a| part[a] && (0..n).filter(|&x| part[x]).all(|x| b.mul(a, x) == b.mul(x, a)))
        .collect()
}

fn product_set(b: &FiniteBrace, x: &[bool], y: &[bool]) -> Vec<bool> {
    let n = b.order();
    let mut out = vec![false; n];
    for p in (0..n).filter(|&p| x[p]) {
        for q in (0..n).filter(|&q| y[q]) {
            out[b.mul(p, q)] = true;
        }
    }
    out
}

/// Checks the structure statements for a finite left brace with
/// `λ_a(a) = a` for all `a`. A failed statement is a hard error.
pub fn theorem_square_report(b: &FiniteBrace) -> Result<SquareReport, BraceError> {
    if !b.is_left() {
        return Err(BraceError::Internal("square report needs a left brace".into()));
    }
    let n = b.order();
    if let Some(a) = (0..n).find(|&a| b.lambda(a, a) != a) {
        return Err(BraceError::NotSquareFree { a });
    }
    let mul = b.multiplicative();

    // a^k = ka for all k up to the order, and a⁻¹ = −a
    let mut powers_ok = true;
    for a in 0..n {
        let (mut p, mut m) = (0, 0);
        for _ in 0..=mul.element_order(a) {
            p = b.mul(p, a);
            m = b.add(m, a);
            powers_ok &= p == m;
        }
    }
    if !powers_ok {
        return Err(fail("a^k = ka"));
    }
    let inverse_ok = (0..n).all(|a| b.mul_inv(a) == b.neg(a));
    if !inverse_ok {
        return Err(fail("a^-1 = -a"));
    }
    if !b.is_two_sided() {
        return Err(fail("two-sided"));
    }
    let class = match mul.nilpotency_class() {
        Some(c) if c <= 2 => c,
        _ => return Err(fail("nilpotency class at most 2")),
    };
    let soc = socle(b)?;
    let center = mul.center();
    let socle_in_center = (0..n).all(|a| !soc.contains(a) || center[a]);
    if !socle_in_center {
        return Err(fail("Soc(G) inside Z(G)"));
    }

    let two_power = |k: usize| k.is_power_of_two();
    let even: Vec<bool> = (0..n).map(|a| two_power(mul.element_order(a))).collect();
    let odd: Vec<bool> = (0..n).map(|a| mul.element_order(a) % 2 == 1).collect();
    let parts_ok = is_ideal(b, &BraceSubset(even.clone())).is_ok() && is_ideal(b, &BraceSubset(odd.clone())).is_ok();
    if !parts_ok {
        return Err(fail("G_e and G_o are ideals"));
    }
    let soc_o = socle_within(b, &odd);
    let z_o = center_within(b, &odd);
    if soc_o != z_o {
        return Err(fail("Soc(G_o) = Z(G_o)"));
    }
    let soc_e = socle_within(b, &even);
    let z_e = center_within(b, &even);
    let product = product_set(b, &soc_e, &z_o);
    if product != soc.0 {
        return Err(fail("Soc(G_e) Z(G_o) = Soc(G)"));
    }
    let alt = product_set(b, &z_e, &soc_o);

    Ok(SquareReport {
        order: n,
        two_sided: true,
        nilpotency_class: class,
        socle_order: soc.len(),
        socle_in_center,
        even_part_order: even.iter().filter(|&&e| e).count(),
        odd_part_order: odd.iter().filter(|&&o| o).count(),
        parts_are_ideals: parts_ok,
        odd_socle_is_center: true,
        product_matches: true,
        alt_product_matches: alt == soc.0,
        powers_match_multiples: powers_ok,
        inverse_is_negative: inverse_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::trivial_brace;
    use crate::group::named::*;

    #[test]
    fn trivial_z3_passes_with_full_socle() {
        let b = trivial_brace(&cyclic(3)).unwrap();
        let r = theorem_square_report(&b).unwrap();
        assert_eq!(r.socle_order, 3);
        assert_eq!(r.nilpotency_class, 1);
        assert!(r.alt_product_matches);
    }

    #[test]
    fn sym3_is_not_square_free() {
        let b = crate::constructions::sym3_brace();
        assert!(matches!(theorem_square_report(&b), Err(BraceError::NotSquareFree { .. })));
    }

    #[test]
    fn trivial_z6_splits_into_parts() {
        let r = theorem_square_report(&trivial_brace(&cyclic(6)).unwrap()).unwrap();
        assert_eq!((r.even_part_order, r.odd_part_order), (2, 3));
    }
}
