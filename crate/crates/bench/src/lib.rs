//! Benchmark inputs.

use loopmu::Word;

/// `(a1 a2 A1 A2)^k a1`, a word whose length grows linearly in `k`.
pub fn commutator_tower(k: usize) -> Word {
    let base: Word = "a1.a2.A1.A2".parse().expect("static word");
    base.pow(k as i64).mul(&"a1".parse().expect("static word"))
}
