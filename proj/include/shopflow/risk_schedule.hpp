#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

namespace shopflow {

// Pairwise collision-risk bookkeeping. Every live customer X carries a
// risk time t'(X,Y) per live peer plus a linked order over peers sorted by
// that time; r(X)/s(X) expose the earliest entry. A pair is only re-examined
// when its risk time comes due, so distance computations happen on entry and
// at due checks instead of every tick.
class RiskSchedule {
  public:
    static constexpr double kTombstone = 1'000'000.0;
    static constexpr int kNone = -1;

    // Peer list of the newcomer, (peer id, absolute risk time).
    void add_customer(int id, const std::vector<std::pair<int, double>>& risks);
    // Departed customers keep their slots but every entry involving them is
    // tombstoned to kTombstone.
    void remove_customer(int id);

    double earliest(int id) const;      // r(X); kTombstone when nothing is live
    int earliest_peer(int id) const;    // s(X); kNone when nothing is live

    // Peers of X with risk time <= limit, in nondecreasing order.
    std::vector<int> due_peers(int id, double limit) const;

    // Reposition the (x, y) entry in both lists.
    void update_pair(int x, int y, double t);

    double risk_time(int x, int y) const;
    bool tracks(int id) const { return lists_.count(id) != 0; }

    // Traversal order check: every live peer visited exactly once, times
    // nondecreasing, tombstones trailing. Throws std::logic_error on a cycle.
    bool consistent(int id) const;

  private:
    struct PeerList {
        std::unordered_map<int, double> t;
        std::unordered_map<int, int> next;
        std::unordered_map<int, int> prev;
        int head = kNone;
        int tail = kNone;
    };

    void unlink(PeerList& l, int peer);
    void insert_sorted(PeerList& l, int peer, double t);

    std::unordered_map<int, PeerList> lists_;
};

}  // namespace shopflow
