#![no_main]

use braidsys_core::BraidWord;
use libfuzzer_sys::fuzz_target;

// First byte picks the degree, the rest is the word text.
fuzz_target!(|data: &[u8]| {
    let Some((&d, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let degree = d as usize % 12;
    if let Ok(w) = BraidWord::parse(text, degree) {
        let again = BraidWord::parse(&w.to_token_string(), degree).unwrap();
        assert_eq!(again, w);
    }
});
