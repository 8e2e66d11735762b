//! Brute-force enumeration oracles for the point-counting routes.
//!
//! The oracles never touch the quadratic character: square roots are found by
//! scanning, residual values at branch points by direct modular products with
//! Fermat inversion. Golden values pinned here were first produced by these
//! oracles and must keep matching both the oracle and the fast routes.

use kleincover_core::f2sym::CaseLabel;
use kleincover_core::ffield::{FieldCtx, FieldEl};
use kleincover_core::tower::lift_generators;
use kleincover_core::verify::{count_quadratic, count_top, BranchAssignment};

/// Number of square roots of each element, by exhaustive squaring.
fn sqrt_counts(ctx: &FieldCtx) -> Vec<u8> {
    let mut counts = vec![0u8; ctx.q() as usize];
    for n in 0..ctx.q() {
        let y = ctx.element_from_index(n);
        let idx = ctx.element_index(ctx.mul(y, y)) as usize;
        counts[idx] += 1;
    }
    counts
}

fn eval_product(ctx: &FieldCtx, roots: &[u64], x: FieldEl) -> FieldEl {
    let mut prod = ctx.one();
    for &r in roots {
        prod = ctx.mul(prod, ctx.sub(x, ctx.scalar(r)));
    }
    prod
}

/// Points of `y² = ∏(x - r)` over the context's field, plus the two points at
/// infinity of the even-degree monic model.
fn oracle_count_quadratic(ctx: &FieldCtx, roots: &[u64]) -> u64 {
    let sqrt = sqrt_counts(ctx);
    let mut total = 2u64;
    for n in 0..ctx.q() {
        let x = ctx.element_from_index(n);
        let z = eval_product(ctx, roots, x);
        total += sqrt[ctx.element_index(z) as usize] as u64;
    }
    total
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Exhaustive fiber enumeration of the top curve: over a generic point the
/// fiber size is the product of the square-root counts of the three branch
/// values; over a branch point the residual square roots index the fiber of
/// the normalization; the fiber at infinity has eight rational points.
fn oracle_count_top(ctx: &FieldCtx, b: &BranchAssignment, case: CaseLabel) -> u64 {
    let t = lift_generators(&case.canonical_subgroup());
    let sqrt = sqrt_counts(ctx);
    let p = b.p();
    let subset_roots = |mask: u8| -> Vec<u64> {
        (1..=8u8)
            .filter(|i| mask & (1 << (i - 1)) != 0)
            .map(|i| b.point(i))
            .collect()
    };
    let s1 = subset_roots(t.s_eta());
    let s2 = subset_roots(t.s_xi());
    let all = b.points();

    // Residual value of the branch polynomial over `mask` at u_j, with the
    // vanishing factor removed: a plain modular product.
    let residual = |roots: &[u64], uj: u64| -> u64 {
        let mut prod = 1u64;
        for &r in roots {
            if r != uj {
                prod = prod * ((uj + p - r) % p) % p;
            }
        }
        prod
    };

    let mut total = 8u64; // fiber at infinity
    for n in 0..ctx.q() {
        let x = ctx.element_from_index(n);
        let branch_index = if n < p {
            all.iter().position(|&u| u == n)
        } else {
            None
        };
        let fiber = match branch_index {
            None => {
                let n1 = sqrt[ctx.element_index(eval_product(ctx, &s1, x)) as usize] as u64;
                let n2 = sqrt[ctx.element_index(eval_product(ctx, &s2, x)) as usize] as u64;
                let n3 = sqrt[ctx.element_index(eval_product(ctx, &all, x)) as usize] as u64;
                n1 * n2 * n3
            }
            Some(j) => {
                let uj = all[j];
                let in1 = s1.contains(&uj);
                let in2 = s2.contains(&uj);
                let g3 = residual(&all, uj);
                let g3_inv = pow_mod(g3, p - 2, p);
                let count_of = |v: u64| sqrt[v as usize] as u64;
                match (in1, in2) {
                    (false, false) => {
                        count_of(eval_product(ctx, &s1, ctx.scalar(uj)).0[0])
                            * count_of(eval_product(ctx, &s2, ctx.scalar(uj)).0[0])
                    }
                    (true, false) => {
                        let r1 = residual(&s1, uj) * g3_inv % p;
                        count_of(r1) * count_of(eval_product(ctx, &s2, ctx.scalar(uj)).0[0])
                    }
                    (false, true) => {
                        let r2 = residual(&s2, uj) * g3_inv % p;
                        count_of(eval_product(ctx, &s1, ctx.scalar(uj)).0[0]) * count_of(r2)
                    }
                    (true, true) => {
                        let r1 = residual(&s1, uj) * g3_inv % p;
                        let r2 = residual(&s2, uj) * g3_inv % p;
                        count_of(r1) * count_of(r2)
                    }
                }
            }
        };
        total += fiber;
    }
    total
}

#[test]
fn quadratic_oracle_agrees_with_character_route() {
    let b = BranchAssignment::new(11, [0, 1, 2, 3, 4, 5, 6, 7]).unwrap();
    for case in [CaseLabel::II2, CaseLabel::I2] {
        let t = lift_generators(&case.canonical_subgroup());
        for k in 1..=2usize {
            let ctx = FieldCtx::new(11, k).unwrap();
            for chi in 1..8u8 {
                let subset = t.chi_subset(kleincover_core::tower::DeckCharacter(chi));
                let roots: Vec<u64> = (1..=8u8)
                    .filter(|i| subset & (1 << (i - 1)) != 0)
                    .map(|i| b.point(i))
                    .collect();
                let fast = count_quadratic(subset, &b, &ctx).unwrap().count;
                let slow = oracle_count_quadratic(&ctx, &roots);
                assert_eq!(fast, slow, "case {case} chi {chi} k {k}");
            }
        }
    }
}

#[test]
fn quadratic_oracle_pins_the_f11_golden() {
    let ctx = FieldCtx::new(11, 1).unwrap();
    let points: Vec<u64> = (0..8).collect();
    let oracle = oracle_count_quadratic(&ctx, &points);
    assert_eq!(oracle, 16);
    let b = BranchAssignment::new(11, [0, 1, 2, 3, 4, 5, 6, 7]).unwrap();
    assert_eq!(count_quadratic(0xff, &b, &ctx).unwrap().count, 16);
}

#[test]
fn genus_one_golden_over_f5_and_f25() {
    // y² = x(x-1)(x-2)(x-3): 8 points over F_5, hence L = 1 + 2T + 5T²,
    // which predicts 32 points over F_25.
    let roots = [0u64, 1, 2, 3];
    let c5 = FieldCtx::new(5, 1).unwrap();
    assert_eq!(oracle_count_quadratic(&c5, &roots), 8);
    let c25 = FieldCtx::new(5, 2).unwrap();
    assert_eq!(oracle_count_quadratic(&c25, &roots), 32);
    let l = kleincover_core::verify::LPolynomial::from_counts(5, 1, &[8]).unwrap();
    assert_eq!(l.coeffs, vec![1, 2, 5]);
    assert_eq!(l.predicted_count(2), 32);
}

#[test]
fn top_oracle_agrees_with_fiber_route_all_cases() {
    let b = BranchAssignment::new(11, [0, 1, 2, 3, 4, 5, 6, 7]).unwrap();
    for case in CaseLabel::ALL {
        let t = lift_generators(&case.canonical_subgroup());
        for k in 1..=2usize {
            let ctx = FieldCtx::new(11, k).unwrap();
            let fast = count_top(&b, t, &ctx).unwrap().count;
            let slow = oracle_count_top(&ctx, &b, case);
            assert_eq!(fast, slow, "case {case} k {k}");
        }
    }
}

#[test]
fn top_oracle_pins_the_f11_case_ii2_golden() {
    let b = BranchAssignment::new(11, [0, 1, 2, 3, 4, 5, 6, 7]).unwrap();
    let t = lift_generators(&CaseLabel::II2.canonical_subgroup());
    let c11 = FieldCtx::new(11, 1).unwrap();
    assert_eq!(oracle_count_top(&c11, &b, CaseLabel::II2), 12);
    assert_eq!(count_top(&b, t, &c11).unwrap().count, 12);
    let c121 = FieldCtx::new(11, 2).unwrap();
    assert_eq!(oracle_count_top(&c121, &b, CaseLabel::II2), 160);
    assert_eq!(count_top(&b, t, &c121).unwrap().count, 160);
}

#[test]
fn node_l_polynomials_agree_across_routes() {
    // In case II.2 the Jacobian of the involution quotient above the starred
    // elliptic node is isogenous to it, so their Weil polynomials coincide
    // even though one is counted by Frobenius descent and the other by plain
    // character sums.
    let b = BranchAssignment::new(11, [0, 1, 2, 3, 4, 5, 6, 7]).unwrap();
    let tower = kleincover_core::tower::build_tower(&CaseLabel::II2.canonical_subgroup()).unwrap();
    let summary = kleincover_core::tower::prym_summary(&tower);
    for pred in &summary.isogeny_predictions {
        let node = &tower.nodes[pred.quotient];
        if node.genus > 2 {
            continue;
        }
        let direct = kleincover_core::verify::l_polynomial_for_node(&tower, pred.quotient, &b)
            .unwrap();
        let factors: Vec<kleincover_core::verify::LPolynomial> = pred
            .factors
            .iter()
            .map(|&i| kleincover_core::verify::l_polynomial_for_node(&tower, i, &b).unwrap())
            .collect();
        let refs: Vec<&kleincover_core::verify::LPolynomial> = factors.iter().collect();
        let product = kleincover_core::verify::LPolynomial::product(&refs, 11);
        assert_eq!(direct.coeffs, product.coeffs, "node {}", node.name);
    }
}

#[test]
fn top_oracle_agrees_on_random_assignments() {
    for seed in 0..4u64 {
        let b = BranchAssignment::random(13, seed).unwrap();
        for case in CaseLabel::ALL {
            let t = lift_generators(&case.canonical_subgroup());
            let ctx = FieldCtx::new(13, 1).unwrap();
            let fast = count_top(&b, t, &ctx).unwrap().count;
            let slow = oracle_count_top(&ctx, &b, case);
            assert_eq!(fast, slow, "case {case} seed {seed}");
        }
    }
}
