#include "shopflow/risk_schedule.hpp"

#include <stdexcept>

namespace shopflow {

void RiskSchedule::unlink(PeerList& l, int peer) {
    const int p = l.prev.at(peer);
    const int n = l.next.at(peer);
    if (p != kNone) l.next[p] = n; else l.head = n;
    if (n != kNone) l.prev[n] = p; else l.tail = p;
    l.prev.erase(peer);
    l.next.erase(peer);
}

void RiskSchedule::insert_sorted(PeerList& l, int peer, double t) {
    l.t[peer] = t;
    int cur = l.head;
    int last = kNone;
    std::size_t guard = 0;
    while (cur != kNone && l.t.at(cur) <= t) {
        if (++guard > l.t.size() + 1) throw std::logic_error("risk list cycle");
        last = cur;
        cur = l.next.at(cur);
    }
    l.prev[peer] = last;
    l.next[peer] = cur;
    if (last != kNone) l.next[last] = peer; else l.head = peer;
    if (cur != kNone) l.prev[cur] = peer; else l.tail = peer;
}

void RiskSchedule::add_customer(int id, const std::vector<std::pair<int, double>>& risks) {
    if (lists_.count(id)) throw std::invalid_argument("risk schedule: duplicate customer");
    PeerList& mine = lists_[id];
    for (const auto& [peer, t] : risks) {
        insert_sorted(mine, peer, t);
        insert_sorted(lists_.at(peer), id, t);
    }
}

void RiskSchedule::remove_customer(int id) {
    PeerList& mine = lists_.at(id);
    for (auto& [peer, t] : mine.t) {
        if (t < kTombstone) {
            PeerList& theirs = lists_.at(peer);
            unlink(theirs, id);
            insert_sorted(theirs, id, kTombstone);
        }
        t = kTombstone;
    }
}

double RiskSchedule::earliest(int id) const {
    const PeerList& l = lists_.at(id);
    return l.head == kNone ? kTombstone : l.t.at(l.head);
}

int RiskSchedule::earliest_peer(int id) const {
    const PeerList& l = lists_.at(id);
    if (l.head == kNone || l.t.at(l.head) >= kTombstone) return kNone;
    return l.head;
}

std::vector<int> RiskSchedule::due_peers(int id, double limit) const {
    std::vector<int> out;
    const PeerList& l = lists_.at(id);
    int cur = l.head;
    std::size_t guard = 0;
    while (cur != kNone && l.t.at(cur) <= limit && l.t.at(cur) < kTombstone) {
        if (++guard > l.t.size() + 1) throw std::logic_error("risk list cycle");
        out.push_back(cur);
        cur = l.next.at(cur);
    }
    return out;
}

void RiskSchedule::update_pair(int x, int y, double t) {
    PeerList& lx = lists_.at(x);
    PeerList& ly = lists_.at(y);
    unlink(lx, y);
    insert_sorted(lx, y, t);
    unlink(ly, x);
    insert_sorted(ly, x, t);
}

double RiskSchedule::risk_time(int x, int y) const { return lists_.at(x).t.at(y); }

bool RiskSchedule::consistent(int id) const {
    const PeerList& l = lists_.at(id);
    double last = -1.0;
    std::size_t seen = 0;
    int cur = l.head;
    while (cur != kNone) {
        if (++seen > l.t.size()) throw std::logic_error("risk list cycle");
        const double t = l.t.at(cur);
        if (t < last) return false;
        last = t;
        cur = l.next.at(cur);
    }
    return seen == l.t.size();
}

}  // namespace shopflow
