//! End-to-end acceptance checks. Each test exercises one headline guarantee
//! over the full desk-scale corpus and prints a single PASS line; the whole
//! file is expected to finish in well under two minutes, with the skein sweep
//! alone under one minute.

use num::BigRational;
use qtop::gq::{hbar_int, i_hbar, minus_i_hbar};
use qtop::{
    dirac_residual, hamiltonian_vf, int_poly, jones, momentum_operator, poisson,
    position_operator, skein_residual, BraidWord, Cobordism, DiffOperator, FrobeniusAlgebra,
    FusionLevel, Generator, LinkDiagram, Matrix, MultiPoly, VarTable,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

// ---- corpus -------------------------------------------------------------

/// Every braid word on `strands` strands with at most `max_len` letters,
/// including the empty word.
fn braid_words(strands: u32, max_len: usize) -> Vec<BraidWord> {
    let gens: Vec<i32> = (1..strands as i32).flat_map(|i| [i, -i]).collect();
    let mut out = vec![BraidWord::new(strands, Vec::new()).unwrap()];
    let mut frontier: Vec<Vec<i32>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * gens.len());
        for w in &frontier {
            for &g in &gens {
                let mut v = Vec::with_capacity(w.len() + 1);
                v.extend_from_slice(w);
                v.push(g);
                out.push(BraidWord::new(strands, v.clone()).unwrap());
                next.push(v);
            }
        }
        frontier = next;
    }
    out
}

const PD_GOLDENS: [&str; 4] = [
    "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",             // right trefoil
    "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)",   // figure-eight
    "X(1,4,2,3) X(3,2,4,1)",                         // Hopf link
    "X(1,2,2,3) X(3,1,4,4)",                         // doubly kinked unknot
];

fn corpus() -> Vec<LinkDiagram> {
    let mut out: Vec<LinkDiagram> = braid_words(2, 8)
        .iter()
        .chain(braid_words(3, 8).iter())
        .map(BraidWord::closure)
        .collect();
    out.extend(PD_GOLDENS.iter().map(|t| LinkDiagram::parse_pd(t).unwrap()));
    out
}

// ---- 1: skein relation --------------------------------------------------

#[test]
fn acceptance_1_skein_relation() {
    let diagrams = corpus();
    let checked: usize = diagrams
        .par_iter()
        .map(|d| {
            let mut count = 0;
            for i in 0..d.crossings().len() {
                let r = skein_residual(d, i).unwrap();
                assert!(r.is_zero(), "nonzero residual at crossing {i} of {d:?}");
                count += 1;
            }
            count
        })
        .sum();
    assert!(checked > 600_000, "corpus smaller than intended: {checked}");
    println!("ACCEPTANCE 1 (skein relation on corpus, {checked} crossings): PASS");
}

// ---- 2: four-point block bound -------------------------------------------

#[test]
fn acceptance_2_four_point_bound() {
    for k in 1..=64u32 {
        let dim = FusionLevel::new(k)
            .unwrap()
            .block_dim_sphere(&[1, 1, 1, 1])
            .unwrap();
        let want = if k == 1 { 1 } else { 2 };
        assert_eq!(dim, want, "k={k}");
        assert!(dim <= 2, "k={k}");
    }
    println!("ACCEPTANCE 2 (four-point block dimension bound, k <= 64): PASS");
}

// ---- 3: Verlinde formula vs. path counting --------------------------------

#[test]
fn acceptance_3_verlinde_matches_paths() {
    let mut checked: u64 = 0;
    for k in 1..=8u32 {
        let lv = FusionLevel::new(k).unwrap();
        assert_eq!(lv.verlinde_dim(0, &[]).unwrap(), 1, "k={k} empty marking");
        checked += 1;
        for len in 1..=6usize {
            let mut seq = vec![0u32; len];
            loop {
                assert_eq!(
                    lv.verlinde_dim(0, &seq).unwrap(),
                    lv.block_dim_sphere(&seq).unwrap(),
                    "k={k} seq={seq:?}"
                );
                checked += 1;
                // odometer over all label sequences
                let mut pos = 0;
                loop {
                    if pos == len {
                        break;
                    }
                    if seq[pos] < k {
                        seq[pos] += 1;
                        break;
                    }
                    seq[pos] = 0;
                    pos += 1;
                }
                if pos == len {
                    break;
                }
            }
        }
    }
    println!("ACCEPTANCE 3 (Verlinde formula = path counts, {checked} markings): PASS");
}

// ---- 4: Jones golden values -----------------------------------------------

#[test]
fn acceptance_4_jones_goldens() {
    let unknot = BraidWord::parse("B1").unwrap().closure();
    assert_eq!(jones(&unknot).unwrap(), int_poly("s", &[(0, 1)]));

    let trefoil = BraidWord::parse("B2 1 1 1").unwrap().closure();
    assert_eq!(
        jones(&trefoil).unwrap(),
        int_poly("s", &[(8, -1), (6, 1), (2, 1)])
    );

    let hopf = BraidWord::parse("B2 1 1").unwrap().closure();
    assert_eq!(jones(&hopf).unwrap(), int_poly("s", &[(5, -1), (1, -1)]));

    // Frozen from the state-sum oracle before any fast path existed.
    let fig8 = BraidWord::parse("B3 1 -2 1 -2").unwrap().closure();
    let golden = int_poly("s", &[(4, 1), (2, -1), (0, 1), (-2, -1), (-4, 1)]);
    assert_eq!(jones(&fig8).unwrap(), golden);
    // The knot-table planar diagram agrees with the braid closure.
    let fig8_pd = LinkDiagram::parse_pd(PD_GOLDENS[1]).unwrap();
    assert_eq!(jones(&fig8_pd).unwrap(), golden);

    println!("ACCEPTANCE 4 (Jones golden values): PASS");
}

// ---- 5: mirror symmetry and Markov invariance -----------------------------

#[test]
fn acceptance_5_invariance() {
    // Mirror symmetry on the full corpus.
    let diagrams = corpus();
    diagrams.par_iter().for_each(|d| {
        let v = jones(d).unwrap();
        let vm = jones(&d.mirror()).unwrap();
        assert_eq!(vm, v.invert_var(), "mirror mismatch for {d:?}");
    });

    // Braid relation: s1 s2 s1 = s2 s1 s2 appended to every short 3-strand word.
    braid_words(3, 6).par_iter().for_each(|w| {
        for (a, b) in [([1, 2, 1], [2, 1, 2]), ([-1, -2, -1], [-2, -1, -2])] {
            let mut la = w.letters().to_vec();
            la.extend(a);
            let mut lb = w.letters().to_vec();
            lb.extend(b);
            let va = jones(&BraidWord::new(3, la).unwrap().closure()).unwrap();
            let vb = jones(&BraidWord::new(3, lb).unwrap().closure()).unwrap();
            assert_eq!(va, vb, "braid relation failed after {:?}", w.letters());
        }
    });

    // Markov stabilization: adjoining a strand and crossing it once, with
    // either sign, preserves the closure's invariant.
    let stabilize = |words: &[BraidWord], n: u32| {
        words.par_iter().for_each(|w| {
            let base = jones(&w.closure()).unwrap();
            for sign in [1i32, -1] {
                let mut letters = w.letters().to_vec();
                letters.push(sign * n as i32);
                let stab = BraidWord::new(n + 1, letters).unwrap().closure();
                assert_eq!(jones(&stab).unwrap(), base, "stabilization of {:?}", w.letters());
            }
        });
    };
    stabilize(&braid_words(2, 8), 2);
    stabilize(&braid_words(3, 6), 3);

    println!("ACCEPTANCE 5 (mirror, braid-relation, Markov invariance): PASS");
}

// ---- 6: TQFT axioms --------------------------------------------------------

fn random_cobordism(rng: &mut ChaCha8Rng, source: usize, max_width: usize) -> Cobordism {
    let depth = rng.random_range(1..=4usize);
    let mut width = source;
    let mut layers = Vec::new();
    for _ in 0..depth {
        let mut remaining = width;
        let mut layer = Vec::new();
        let mut produced = 0;
        while remaining > 0 {
            let g = match rng.random_range(0..6) {
                0 => Generator::Identity,
                1 if remaining >= 2 => Generator::Swap,
                2 => Generator::Cup,
                3 if remaining >= 2 => Generator::Pants,
                4 if produced + 2 <= max_width => Generator::Copants,
                _ => Generator::Identity,
            };
            let (i, o) = g.arity();
            remaining -= i;
            produced += o;
            layer.push(g);
        }
        if produced < max_width && rng.random_bool(0.3) {
            layer.push(Generator::Cap);
            produced += 1;
        }
        width = produced;
        layers.push(layer);
    }
    Cobordism::new(source, layers).expect("generated word is arity-correct")
}

fn pairing_matrix(a: &FrobeniusAlgebra) -> Matrix {
    let d = a.dim();
    let mut m = Matrix::zeros(d, d);
    for (i, row) in a.pairing().iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            m.set(i, j, v.clone());
        }
    }
    m
}

#[test]
fn acceptance_6_tqft_axioms() {
    let verlinde = |k: u32| qtop::frobenius_from_fusion(FusionLevel::new(k).unwrap());
    let algebras = vec![
        FrobeniusAlgebra::z2_group_algebra(),
        verlinde(1),
        verlinde(2),
        verlinde(3),
    ];
    let mut compositions = 0usize;
    for (ai, a) in algebras.iter().enumerate() {
        assert!(a.validate().is_valid());
        let max_width = if a.dim() > 3 { 2 } else { 3 };
        let mut rng = ChaCha8Rng::seed_from_u64(600 + ai as u64);
        for _ in 0..200 {
            let src = rng.random_range(0..=2);
            let left = random_cobordism(&mut rng, src, max_width);
            let right = random_cobordism(&mut rng, left.target(), max_width);

            // Functoriality, and gluing along the shared boundary.
            let composed = left.compose(&right).unwrap();
            let lm = a.evaluate(&left).unwrap();
            let rm = a.evaluate(&right).unwrap();
            let cm = a.evaluate(&composed).unwrap();
            assert_eq!(cm, rm.mul(&lm));
            assert_eq!(a.glue_pair(&left, &right).unwrap(), cm);

            // Monoidality under disjoint union (narrow pieces: the tensor
            // square of a wide word over the dim-4 algebra is enormous).
            let top_src = rng.random_range(0..=2);
            let top = random_cobordism(&mut rng, top_src, 2);
            let bottom_src = rng.random_range(0..=2);
            let bottom = random_cobordism(&mut rng, bottom_src, 2);
            let side = a.evaluate(&top.parallel(&bottom)).unwrap();
            assert_eq!(
                side,
                a.evaluate(&top).unwrap().kron(&a.evaluate(&bottom).unwrap())
            );

            // Duality: reversal is the pairing-conjugated transpose.
            let backward = a.evaluate(&left.reverse()).unwrap();
            let p_src = pairing_matrix(a).kron_power(left.source());
            let p_tgt = pairing_matrix(a).kron_power(left.target());
            let expected = p_src.inverse().unwrap().mul(&lm.transpose().mul(&p_tgt));
            assert_eq!(backward, expected);

            compositions += 1;
        }
        // Torus invariant counts the algebra dimension.
        let dim = BigRational::from_integer(num::BigInt::from(a.dim()));
        assert_eq!(a.closed_surface(1).unwrap(), dim);
    }

    // Closed-surface invariants of the fusion algebras match the Verlinde
    // dimensions of the same surfaces.
    for k in 1..=6u32 {
        let lv = FusionLevel::new(k).unwrap();
        let a = qtop::frobenius_from_fusion(lv);
        for g in 0..=3u32 {
            let z = a.closed_surface(g).unwrap();
            let want = BigRational::from_integer(num::BigInt::from(
                lv.verlinde_dim(g, &[]).unwrap(),
            ));
            assert_eq!(z, want, "k={k} genus={g}");
        }
    }

    println!("ACCEPTANCE 6 (TQFT axioms, {compositions} seeded compositions): PASS");
}

// ---- 7: quantization -------------------------------------------------------

fn exp_vectors(len: usize, max: u16) -> Vec<Vec<u16>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in exp_vectors(len - 1, max) {
        let used: u16 = rest.iter().sum();
        for e in 0..=(max - used) {
            let mut v = rest.clone();
            v.push(e);
            out.push(v);
        }
    }
    out
}

fn monomial(t: VarTable, exps: &[u16]) -> MultiPoly {
    exps.iter()
        .enumerate()
        .fold(MultiPoly::one(t), |acc, (idx, &e)| {
            &acc * &MultiPoly::var(t, idx).pow(u32::from(e))
        })
}

fn random_poly(rng: &mut ChaCha8Rng, t: VarTable, max_deg: u16) -> MultiPoly {
    let mut out = MultiPoly::zero(t);
    for _ in 0..rng.random_range(1..=4) {
        let mut term = MultiPoly::constant(t, hbar_int(rng.random_range(-3..=3)));
        let mut budget = max_deg;
        for idx in 0..t.len() {
            let e = rng.random_range(0..=budget.min(2));
            budget -= e;
            term = &term * &MultiPoly::var(t, idx).pow(u32::from(e));
        }
        out = &out + &term;
    }
    out
}

#[test]
fn acceptance_7_quantization() {
    // Quantum condition, exhaustively on monomials of total degree <= 4.
    let mut pairs = 0usize;
    for n in [1usize, 2] {
        let t = VarTable::phase_space(n);
        let monos: Vec<MultiPoly> = exp_vectors(t.len(), 4)
            .iter()
            .map(|e| monomial(t, e))
            .collect();
        let idx: Vec<usize> = (0..monos.len()).collect();
        pairs += idx
            .par_iter()
            .map(|&i| {
                for g in &monos {
                    let r = dirac_residual(&monos[i], g).unwrap();
                    assert!(r.is_zero(), "n={n} f={} g={g}", monos[i]);
                }
                monos.len()
            })
            .sum::<usize>();
    }

    // Jacobi identity and the bracket-to-commutator homomorphism on seeded
    // random triples.
    let mut rng = ChaCha8Rng::seed_from_u64(700);
    for trial in 0..200 {
        let n = if trial % 2 == 0 { 1 } else { 2 };
        let t = VarTable::phase_space(n);
        let f = random_poly(&mut rng, t, 3);
        let g = random_poly(&mut rng, t, 3);
        let h = random_poly(&mut rng, t, 3);
        let cyclic = &(&poisson(&f, &poisson(&g, &h).unwrap()).unwrap()
            + &poisson(&g, &poisson(&h, &f).unwrap()).unwrap())
            + &poisson(&h, &poisson(&f, &g).unwrap()).unwrap();
        assert!(cyclic.is_zero(), "Jacobi failed: f={f} g={g} h={h}");
        let direct = hamiltonian_vf(&poisson(&f, &g).unwrap()).unwrap();
        let viacomm = hamiltonian_vf(&f)
            .unwrap()
            .commutator(&hamiltonian_vf(&g).unwrap());
        assert_eq!(direct, viacomm, "field commutator failed: f={f} g={g}");
    }

    // Canonical commutators in the position-space realization.
    let xt = VarTable::position(2);
    for i in 1..=2usize {
        for j in 1..=2usize {
            let comm = momentum_operator(2, i)
                .unwrap()
                .commutator(&position_operator(2, j).unwrap());
            let want = if i == j {
                DiffOperator::scalar(xt, &minus_i_hbar())
            } else {
                DiffOperator::zero(xt)
            };
            assert_eq!(comm, want);
        }
    }
    // ... and the phase-space operators land on the opposite sign.
    let t1 = VarTable::phase_space(1);
    let pre_p = qtop::prequant(&MultiPoly::var(t1, 1)).unwrap();
    let pre_q = qtop::prequant(&MultiPoly::var(t1, 0)).unwrap();
    assert_eq!(pre_p.commutator(&pre_q), DiffOperator::scalar(t1, &i_hbar()));

    println!("ACCEPTANCE 7 (quantum condition, {pairs} monomial pairs + 200 triples): PASS");
}

// ---- 8: root-of-unity evaluation --------------------------------------------

#[test]
fn acceptance_8_root_of_unity() {
    let diagrams = corpus();
    let checked: usize = diagrams
        .par_iter()
        .map(|d| {
            let mut count = 0;
            for i in 0..d.crossings().len() {
                let r = skein_residual(d, i).unwrap();
                for k in 1..=10i64 {
                    // Both the q-root exp(2*pi*i/(k+2)) and its square root
                    // (the s-convention point) must kill the residual.
                    for den in [k + 2, 2 * (k + 2)] {
                        let v = r.eval_root_of_unity(1, den).unwrap();
                        assert!(
                            v.norm() < 1e-9,
                            "residual {v} at k={k} den={den} crossing {i} of {d:?}"
                        );
                    }
                }
                count += 1;
            }
            count
        })
        .sum();
    assert!(checked > 600_000);
    println!("ACCEPTANCE 8 (root-of-unity residuals, k=1..10, {checked} crossings): PASS");
}
