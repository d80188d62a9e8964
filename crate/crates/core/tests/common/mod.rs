#![allow(dead_code)]

use coverforge::braid::{BraidLetter, BraidWord, Sign};
use coverforge::matrix::IntMatrix;
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_letter(rng: &mut impl Rng, strands: usize) -> BraidLetter {
    let index = rng.gen_range(1..strands);
    let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
    BraidLetter { index, sign }
}

/// Word on 2..=max_strands strands with 1..=max_len letters.
pub fn random_word(rng: &mut impl Rng, max_strands: usize, max_len: usize) -> BraidWord {
    let strands = rng.gen_range(2..=max_strands);
    let len = rng.gen_range(1..=max_len);
    let letters = (0..len).map(|_| random_letter(rng, strands)).collect();
    BraidWord::new(strands, letters).unwrap()
}

pub fn random_knot_word(rng: &mut impl Rng, max_strands: usize, max_len: usize) -> BraidWord {
    loop {
        let w = random_word(rng, max_strands, max_len);
        if w.is_knot() {
            return w;
        }
    }
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

pub fn random_symmetric(rng: &mut impl Rng, size: usize, bound: i64) -> IntMatrix {
    let mut m = IntMatrix::zeros(size, size);
    for i in 0..size {
        for j in i..size {
            let v = BigInt::from(rng.gen_range(-bound..=bound));
            m[(i, j)] = v.clone();
            m[(j, i)] = v;
        }
    }
    m
}

/// Product of random elementary integer operations: determinant ±1.
pub fn random_unimodular(rng: &mut impl Rng, size: usize, steps: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(size);
    if size < 2 {
        return m;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..size);
        let mut j = rng.gen_range(0..size - 1);
        if j >= i {
            j += 1;
        }
        match rng.gen_range(0..3) {
            0 => m.swap_rows(i, j),
            1 => {
                let row: Vec<BigInt> = m.row(i).to_vec();
                for (c, v) in row.into_iter().enumerate() {
                    m[(i, c)] = -v;
                }
            }
            _ => m.add_row_multiple(i, j, &BigInt::from(rng.gen_range(-3..=3))),
        }
    }
    m
}
