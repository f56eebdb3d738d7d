#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sortkit::networks {

/// Upper bound on channel count for anything the library generates or parses.
inline constexpr std::size_t kMaxChannels = 32;

/// Compare-exchange between two 0-based channels; the smaller key ends on `low`.
struct Comparator {
    std::uint32_t low = 0;
    std::uint32_t high = 0;

    friend constexpr bool operator==(const Comparator&, const Comparator&) = default;
    friend constexpr auto operator<=>(const Comparator&, const Comparator&) = default;
};

/// How a network's comparators were obtained and ordered. Doubles as the
/// network family of the unrolled small sorters.
enum class NetworkFamily : std::uint8_t {
    Best,                 ///< embedded best-known tables
    BoseNelsonLocality,   ///< depth-first recursive order, fully unrolled
    BoseNelsonParallel,   ///< greedy level order
    BoseNelsonRecursive,  ///< locality order, emitted as nested sorter calls
};

inline constexpr NetworkFamily kAllFamilies[] = {
    NetworkFamily::Best,
    NetworkFamily::BoseNelsonLocality,
    NetworkFamily::BoseNelsonParallel,
    NetworkFamily::BoseNelsonRecursive,
};

/// "Best", "BN-L", "BN-P", "BN-R"
std::string_view family_label(NetworkFamily f) noexcept;
/// "best", "bn-l", "bn-p", "bn-r" (file names and CLI flags)
std::string_view family_slug(NetworkFamily f) noexcept;
std::optional<NetworkFamily> parse_family(std::string_view text) noexcept;

/// An ordered comparator list over n channels. Construction validates that
/// every comparator has low < high < n.
class Network {
public:
    Network() = default;
    Network(std::size_t n, std::vector<Comparator> comparators, NetworkFamily ordering = NetworkFamily::Best);

    std::size_t channels() const noexcept { return n_; }
    std::size_t size() const noexcept { return comparators_.size(); }
    const std::vector<Comparator>& comparators() const noexcept { return comparators_; }
    NetworkFamily ordering() const noexcept { return ordering_; }

    Network with_ordering(NetworkFamily ordering) const { return Network(n_, comparators_, ordering); }

    friend bool operator==(const Network&, const Network&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Comparator> comparators_;
    NetworkFamily ordering_ = NetworkFamily::Best;
};

/// Channel-disjoint comparator groups in execution order.
struct LeveledNetwork {
    std::size_t n = 0;
    std::vector<std::vector<Comparator>> levels;

    std::size_t depth() const noexcept { return levels.size(); }
};

// --- generation ----------------------------------------------------------------

/// Bose-Nelson network in natural recursive order: sort first half, sort
/// second half, merge. n = 0 and n = 1 give the empty network.
Network generate_bose_nelson(std::size_t n);

/// The merge step of the Bose-Nelson recursion joining two sorted runs of
/// `first` and `second` channels laid out as [0, first) and [first, first + second).
std::vector<Comparator> bose_nelson_merger(std::size_t first, std::size_t second);

/// Embedded best-known network for 2 <= n <= 16. Throws UnsupportedSize otherwise.
const Network& best_network(std::size_t n);

/// The network behind an unrolled sorter family at size n (2..16 for Best).
Network family_network(NetworkFamily family, std::size_t n);

// --- ordering ------------------------------------------------------------------

/// Reorders a Bose-Nelson comparator multiset into the depth-first recursive
/// order. Throws std::invalid_argument if `net` is not a Bose-Nelson network.
Network reorder_locality(const Network& net);

/// Greedy earliest-level schedule, levels concatenated.
Network reorder_parallelism(const Network& net);

/// Greedy earliest-level schedule: each comparator goes one level after the
/// latest level already holding one of its channels. Ties keep network order.
LeveledNetwork compute_levels(const Network& net);

std::size_t depth(const Network& net);

/// Number of levels obtained by merging only consecutive channel-disjoint
/// comparators, i.e. the depth of the network executed exactly as listed.
std::size_t sequential_depth(const Network& net);

// --- verification --------------------------------------------------------------

inline constexpr std::size_t kMaxExhaustiveChannels = 24;

/// Zero-one principle check over all 2^n binary inputs. Throws
/// TooLargeForExhaustive for n > 24.
bool verify_zero_one(const Network& net);

/// Per-channel comparator subsequences; two orderings of the same network are
/// dependency-equivalent iff these match.
std::vector<std::vector<Comparator>> channel_sequences(const Network& net);

}  // namespace sortkit::networks
