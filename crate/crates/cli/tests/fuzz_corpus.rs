//! Replays the fuzz seeds through the same checks the fuzz targets make.

use std::fs;
use std::path::Path;

use qisg_cli::structure::{canonicalize, parse_structure};
use qisg_core::linear::{format_scalar, parse_scalar};

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&p).unwrap()))
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn structure_seeds() {
    let mut ok = 0;
    for (name, data) in seeds("parse_structure") {
        let text = String::from_utf8(data).unwrap();
        let parsed = parse_structure(&text);
        assert_eq!(parsed.is_ok(), !name.starts_with("bad-"), "{name}: {parsed:?}");
        ok += parsed.is_ok() as usize;
    }
    assert_eq!(ok, 5);
}

#[test]
fn scalar_seeds() {
    for (name, data) in seeds("parse_scalar") {
        let text = String::from_utf8(data).unwrap();
        if let Ok(q) = parse_scalar(&text) {
            assert_eq!(parse_scalar(&format_scalar(&q)).unwrap(), q, "{name}");
        }
    }
}

#[test]
fn roundtrip_seeds() {
    for (name, data) in seeds("roundtrip") {
        if let Ok(once) = canonicalize(&String::from_utf8(data).unwrap()) {
            assert_eq!(canonicalize(&once).unwrap(), once, "{name}");
        }
    }
}

#[test]
fn mutated_seeds_never_panic() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    let pool: Vec<Vec<u8>> = seeds("parse_structure").into_iter().map(|(_, d)| d).collect();
    let alphabet = b"{}[],:\"0123456789-/. abekqxz";
    for _ in 0..4000 {
        let mut d = pool[rng.gen_range(0..pool.len())].clone();
        for _ in 0..rng.gen_range(1..4) {
            let i = rng.gen_range(0..d.len());
            match rng.gen_range(0..3) {
                0 => d[i] = alphabet[rng.gen_range(0..alphabet.len())],
                1 => {
                    d.remove(i);
                }
                _ => d.insert(i, alphabet[rng.gen_range(0..alphabet.len())]),
            }
            if d.is_empty() {
                break;
            }
        }
        let text = String::from_utf8_lossy(&d);
        let _ = parse_structure(&text);
        if let Ok(once) = canonicalize(&text) {
            assert_eq!(canonicalize(&once).unwrap(), once, "{text}");
        }
        for piece in text.split('"') {
            if let Ok(q) = parse_scalar(piece) {
                assert_eq!(parse_scalar(&format_scalar(&q)).unwrap(), q, "{piece:?}");
            }
        }
    }
}
