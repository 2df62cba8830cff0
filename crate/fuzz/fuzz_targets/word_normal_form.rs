#![no_main]

use braidsys_core::garside::NormalForm;
use braidsys_core::BraidWord;
use libfuzzer_sys::fuzz_target;

// Each byte is a letter: low bits pick the generator, high bit the sign.
fuzz_target!(|data: &[u8]| {
    let Some((&d, rest)) = data.split_first() else {
        return;
    };
    let degree = d as usize % 7 + 2;
    let letters: Vec<i32> = rest
        .iter()
        .take(256)
        .map(|&b| {
            let i = (b & 0x7f) as i32 % (degree as i32 - 1) + 1;
            if b & 0x80 == 0 {
                i
            } else {
                -i
            }
        })
        .collect();
    let w = BraidWord::new(degree, letters).unwrap();
    let nf = NormalForm::from_word(&w);
    assert_eq!(NormalForm::from_word(&nf.to_word()), nf);
    assert_eq!(nf.inverse(), NormalForm::from_word(&w.inverse()));
    assert!(nf.multiply(&nf.inverse()).unwrap().is_identity());
});
