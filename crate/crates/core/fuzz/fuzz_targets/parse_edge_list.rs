#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = symedge::parse_edge_list(data) {
        // anything accepted must survive a round trip
        let again = symedge::parse_edge_list(g.to_edge_list().as_bytes()).unwrap();
        assert_eq!(again.edges(), g.edges());
        assert_eq!(again.vertex_count(), g.vertex_count());
    }
});
