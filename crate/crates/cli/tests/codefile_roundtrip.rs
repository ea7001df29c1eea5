use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use uedetect::CodeFile;
use uedetect_core::{CodewordList, FieldMatrix, GeneratorMatrix, PrimeModulus};

fn random_linear(rng: &mut ChaCha8Rng) -> GeneratorMatrix {
    let q = [2u64, 3, 5, 7, 65521][rng.gen_range(0..5)];
    let modulus = PrimeModulus::new(q).unwrap();
    let n = rng.gen_range(1..=16);
    let k = rng.gen_range(1..=n);
    loop {
        let data = (0..k * n).map(|_| rng.gen_range(0..q as u32)).collect();
        if let Ok(g) = GeneratorMatrix::new(FieldMatrix::new(modulus, k, n, data).unwrap()) {
            return g;
        }
    }
}

fn random_nonlinear(rng: &mut ChaCha8Rng) -> CodewordList {
    let q = [2u64, 3, 5][rng.gen_range(0..3)];
    let modulus = PrimeModulus::new(q).unwrap();
    let n = rng.gen_range(2..=10);
    let mut words: Vec<Vec<u32>> = Vec::new();
    for _ in 0..rng.gen_range(2..=12) {
        let w: Vec<u32> = (0..n).map(|_| rng.gen_range(0..q as u32)).collect();
        if !words.contains(&w) {
            words.push(w);
        }
    }
    if words.len() < 2 {
        words = vec![vec![0; n], vec![1; n]];
    }
    CodewordList::new(modulus, n, &words).unwrap()
}

#[test]
fn canonical_writer_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for i in 0..300 {
        let code = if i % 2 == 0 {
            CodeFile::Linear(random_linear(&mut rng))
        } else {
            CodeFile::Nonlinear(random_nonlinear(&mut rng))
        };
        let text = code.to_text();
        let back = CodeFile::parse(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
        assert_eq!(back, code, "{text}");
        assert_eq!(back.to_text(), text);
    }
}

#[test]
fn comments_and_spacing_do_not_survive_canonical_form() {
    let messy = "\
# repetition code
   linear   3 1 4

# the only row
2 2  2 2
";
    let code = CodeFile::parse(messy).unwrap();
    assert_eq!(code.to_text(), "linear 3 1 4\n2 2 2 2\n");
}
