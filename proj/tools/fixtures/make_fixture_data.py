#!/usr/bin/env python3
"""Regenerates the bundled sample data under data/.

The lexicon embeddings are synthetic: each word is a weighted sum of topic
axes plus a little word-seeded noise, so neighbours, categories and puns are
predictable. Phonemes come from a crude spelling-to-sound rule set (English)
or hand-written pinyin syllables (Chinese).
"""

import hashlib
import json
import math
import pathlib
import random

ROOT = pathlib.Path(__file__).resolve().parents[2]
DATA = ROOT / "data"

TOPICS = [
    "architecture", "mountain", "river", "grassland", "lake", "sport", "city", "winter",
    "cartography", "art", "food", "creature", "commerce", "time", "society", "sea",
]
DIM = len(TOPICS)
T = {name: i for i, name in enumerate(TOPICS)}

# word: (pos, idf or None, {topic: weight})
WORDS = {
    # architecture
    "temple": ("NOUN", None, {"architecture": 1, "time": 0.3}),
    "pagoda": ("NOUN", None, {"architecture": 1, "mountain": 0.2}),
    "palace": ("NOUN", None, {"architecture": 1, "society": 0.4}),
    "tower": ("NOUN", None, {"architecture": 1, "city": 0.3}),
    "bridge": ("NOUN", None, {"architecture": 0.8, "river": 0.5}),
    "wall": ("NOUN", None, {"architecture": 1, "society": 0.2}),
    "gate": ("NOUN", None, {"architecture": 1, "city": 0.2}),
    "house": ("NOUN", None, {"architecture": 1}),
    "castle": ("NOUN", None, {"architecture": 1, "time": 0.4}),
    "stadium": ("NOUN", None, {"architecture": 0.8, "sport": 0.6}),
    "pavilion": ("NOUN", None, {"architecture": 1, "lake": 0.3}),
    "roof": ("NOUN", None, {"architecture": 1}),
    "village": ("NOUN", None, {"architecture": 0.7, "grassland": 0.4}),
    "street": ("NOUN", None, {"architecture": 0.6, "city": 0.7}),
    "porch": ("NOUN", None, {"architecture": 1}),
    "place": ("NOUN", None, {"cartography": 0.6, "architecture": 0.3}),
    # mountain
    "mountain": ("NOUN", None, {"mountain": 1}),
    "peak": ("NOUN", None, {"mountain": 1, "winter": 0.2}),
    "cliff": ("NOUN", None, {"mountain": 1, "sea": 0.2}),
    "summit": ("NOUN", None, {"mountain": 1, "society": 0.2}),
    "ridge": ("NOUN", None, {"mountain": 1}),
    "rock": ("NOUN", None, {"mountain": 1}),
    "stone": ("NOUN", None, {"mountain": 0.9, "architecture": 0.3}),
    "valley": ("NOUN", None, {"mountain": 0.8, "river": 0.5}),
    "hill": ("NOUN", None, {"mountain": 0.9, "grassland": 0.3}),
    "volcano": ("NOUN", None, {"mountain": 1, "sea": 0.2}),
    "cave": ("NOUN", None, {"mountain": 1}),
    "steep": ("ADJ", None, {"mountain": 1}),
    # river
    "river": ("NOUN", None, {"river": 1}),
    "stream": ("NOUN", None, {"river": 1}),
    "waterfall": ("NOUN", None, {"river": 0.9, "mountain": 0.4}),
    "flow": ("VERB", None, {"river": 1}),
    "current": ("NOUN", None, {"river": 0.9, "time": 0.3}),
    "delta": ("NOUN", None, {"river": 1, "sea": 0.4}),
    "canal": ("NOUN", None, {"river": 1, "architecture": 0.3}),
    "rapids": ("NOUN", None, {"river": 1}),
    "bank": ("NOUN", None, {"river": 0.6, "commerce": 0.8}),
    "ferry": ("NOUN", None, {"river": 0.8, "sea": 0.5}),
    # grassland
    "grassland": ("NOUN", None, {"grassland": 1}),
    "meadow": ("NOUN", None, {"grassland": 1}),
    "prairie": ("NOUN", None, {"grassland": 1}),
    "steppe": ("NOUN", None, {"grassland": 1, "society": 0.1}),
    "field": ("NOUN", None, {"grassland": 1, "food": 0.2}),
    "grass": ("NOUN", None, {"grassland": 1}),
    "herd": ("NOUN", None, {"grassland": 0.8, "creature": 0.6}),
    "pasture": ("NOUN", None, {"grassland": 1, "creature": 0.3}),
    "flower": ("NOUN", None, {"grassland": 0.9, "art": 0.2}),
    "wind": ("NOUN", None, {"grassland": 0.8, "winter": 0.4}),
    "green": ("ADJ", None, {"grassland": 1}),
    # lake
    "lake": ("NOUN", None, {"lake": 1}),
    "pond": ("NOUN", None, {"lake": 1}),
    "pool": ("NOUN", None, {"lake": 1, "sport": 0.3}),
    "reflection": ("NOUN", None, {"lake": 0.8, "art": 0.5}),
    "mirror": ("NOUN", None, {"lake": 0.8, "art": 0.4}),
    "swan": ("NOUN", None, {"lake": 0.9, "creature": 0.5}),
    "lotus": ("NOUN", None, {"lake": 1, "art": 0.2}),
    "marsh": ("NOUN", None, {"lake": 1, "grassland": 0.2}),
    "spring": ("NOUN", None, {"lake": 0.8, "time": 0.4}),
    "fountain": ("NOUN", None, {"lake": 0.9, "architecture": 0.3}),
    "calm": ("ADJ", None, {"lake": 1}),
    # sport
    "olympics": ("NOUN", 2.5, {"sport": 1, "society": 0.4, "city": 0.2}),
    "games": ("NOUN", None, {"sport": 1}),
    "athlete": ("NOUN", None, {"sport": 1, "creature": 0.1}),
    "medal": ("NOUN", None, {"sport": 1, "commerce": 0.2}),
    "torch": ("NOUN", None, {"sport": 0.9, "time": 0.2}),
    "race": ("NOUN", None, {"sport": 1}),
    "skate": ("VERB", None, {"sport": 0.8, "winter": 0.6}),
    "ski": ("VERB", None, {"sport": 0.8, "winter": 0.6, "mountain": 0.2}),
    "team": ("NOUN", None, {"sport": 1, "society": 0.3}),
    "champion": ("NOUN", None, {"sport": 1}),
    "winner": ("NOUN", None, {"sport": 1}),
    "bid": ("VERB", 1.5, {"society": 0.7, "commerce": 0.7}),
    "compete": ("VERB", None, {"sport": 1}),
    # city
    "beijing": ("NOUN", 2.0, {"city": 1, "society": 0.3, "time": 0.2}),
    "capital": ("NOUN", None, {"city": 1, "commerce": 0.3}),
    "nation": ("NOUN", None, {"city": 0.6, "society": 0.8}),
    "country": ("NOUN", None, {"city": 0.5, "society": 0.7}),
    "metropolis": ("NOUN", None, {"city": 1}),
    "citizen": ("NOUN", None, {"city": 0.8, "society": 0.5}),
    "shanghai": ("NOUN", None, {"city": 1, "sea": 0.3}),
    "city": ("NOUN", None, {"city": 1, "architecture": 0.4}),
    # winter
    "winter": ("NOUN", 1.2, {"winter": 1, "time": 0.3}),
    "snow": ("NOUN", None, {"winter": 1, "mountain": 0.2}),
    "ice": ("NOUN", None, {"winter": 1, "lake": 0.2}),
    "cold": ("ADJ", None, {"winter": 1}),
    "frost": ("NOUN", None, {"winter": 1}),
    "blizzard": ("NOUN", None, {"winter": 1}),
    "season": ("NOUN", None, {"time": 0.8, "winter": 0.4}),
    "sky": ("NOUN", None, {"winter": 0.4, "art": 0.3, "sea": 0.3}),
    "rain": ("NOUN", None, {"winter": 0.5, "river": 0.4}),
    # cartography
    "map": ("NOUN", None, {"cartography": 1}),
    "atlas": ("NOUN", None, {"cartography": 1}),
    "compass": ("NOUN", None, {"cartography": 1, "sea": 0.2}),
    "route": ("NOUN", None, {"cartography": 1}),
    "island": ("NOUN", None, {"cartography": 0.5, "sea": 0.9}),
    "continent": ("NOUN", None, {"cartography": 1, "sea": 0.2}),
    "journey": ("NOUN", None, {"cartography": 0.9, "time": 0.3}),
    "border": ("NOUN", None, {"cartography": 0.8, "society": 0.5}),
    "territory": ("NOUN", None, {"cartography": 0.8, "society": 0.5}),
    "utopia": ("NOUN", None, {"cartography": 0.5, "art": 0.6, "society": 0.5}),
    "explore": ("VERB", None, {"cartography": 1}),
    # art
    "painting": ("NOUN", None, {"art": 1}),
    "ink": ("NOUN", None, {"art": 1}),
    "brush": ("NOUN", None, {"art": 1}),
    "imagination": ("NOUN", None, {"art": 1}),
    "dream": ("NOUN", None, {"art": 1, "time": 0.2}),
    "poem": ("NOUN", None, {"art": 1}),
    "artist": ("NOUN", None, {"art": 1}),
    "museum": ("NOUN", None, {"art": 0.8, "architecture": 0.4}),
    "exhibition": ("NOUN", None, {"art": 1}),
    "dada": ("NOUN", None, {"art": 1, "time": 0.2}),
    "chance": ("NOUN", None, {"art": 0.6, "commerce": 0.3}),
    "mind": ("NOUN", None, {"art": 0.7, "creature": 0.3}),
    "paint": ("VERB", None, {"art": 1}),
    "imagine": ("VERB", None, {"art": 1}),
    "beautiful": ("ADJ", None, {"art": 1}),
    # food
    "cake": ("NOUN", None, {"food": 1}),
    "bread": ("NOUN", None, {"food": 1}),
    "tea": ("NOUN", None, {"food": 1}),
    "rice": ("NOUN", None, {"food": 1, "grassland": 0.2}),
    "dumpling": ("NOUN", None, {"food": 1}),
    "noodle": ("NOUN", None, {"food": 1}),
    "apple": ("NOUN", None, {"food": 1}),
    "flour": ("NOUN", None, {"food": 1}),
    "fridge": ("NOUN", None, {"food": 1}),
    # creatures and body
    "liver": ("NOUN", None, {"creature": 1}),
    "heart": ("NOUN", None, {"creature": 1}),
    "hand": ("NOUN", None, {"creature": 1}),
    "eye": ("NOUN", None, {"creature": 1}),
    "bird": ("NOUN", None, {"creature": 1}),
    "fish": ("NOUN", None, {"creature": 0.9, "sea": 0.3}),
    "dragon": ("NOUN", None, {"creature": 0.8, "art": 0.4}),
    "horse": ("NOUN", None, {"creature": 1}),
    "hoarse": ("ADJ", None, {"creature": 1}),
    "tiger": ("NOUN", None, {"creature": 1}),
    # commerce
    "money": ("NOUN", None, {"commerce": 1}),
    "market": ("NOUN", None, {"commerce": 1, "city": 0.2}),
    "coin": ("NOUN", None, {"commerce": 1}),
    "trade": ("NOUN", None, {"commerce": 1}),
    "price": ("NOUN", None, {"commerce": 1}),
    "bond": ("NOUN", None, {"commerce": 1}),
    "sell": ("VERB", None, {"commerce": 1}),
    # time
    "time": ("NOUN", None, {"time": 1}),
    "history": ("NOUN", None, {"time": 1, "society": 0.3}),
    "future": ("NOUN", None, {"time": 1}),
    "memory": ("NOUN", None, {"time": 0.8, "art": 0.3}),
    "dynasty": ("NOUN", None, {"time": 0.9, "society": 0.4}),
    "year": ("NOUN", None, {"time": 1}),
    "night": ("NOUN", None, {"time": 1}),
    "moon": ("NOUN", None, {"time": 0.6, "art": 0.4}),
    "march": ("NOUN", None, {"time": 0.8, "society": 0.4}),
    "ancient": ("ADJ", None, {"time": 1}),
    # society
    "power": ("NOUN", None, {"society": 1}),
    "law": ("NOUN", None, {"society": 1}),
    "empire": ("NOUN", None, {"society": 0.9, "time": 0.3}),
    "people": ("NOUN", None, {"society": 1}),
    "freedom": ("NOUN", None, {"society": 1}),
    "reign": ("NOUN", None, {"society": 1}),
    "meddle": ("VERB", None, {"society": 1}),
    # sea
    "sea": ("NOUN", None, {"sea": 1}),
    "ocean": ("NOUN", None, {"sea": 1}),
    "wave": ("NOUN", None, {"sea": 1}),
    "shore": ("NOUN", None, {"sea": 0.9, "lake": 0.2}),
    "harbor": ("NOUN", None, {"sea": 0.9, "city": 0.3}),
    "ship": ("NOUN", None, {"sea": 1}),
    "boat": ("NOUN", None, {"sea": 0.7, "river": 0.6}),
    # verbs with no topic home
    "see": ("VERB", None, {"creature": 0.6, "art": 0.4}),
    "peek": ("VERB", None, {"creature": 1}),
    "mop": ("VERB", None, {"architecture": 0.2, "food": 0.2, "commerce": 0.2, "creature": 0.2}),
    "sink": ("VERB", None, {"sea": 0.4, "food": 0.4}),
    # function words and fillers
    "for": ("OTHER", 0.1, {"time": 0.1, "society": 0.1}),
    "the": ("OTHER", 0.05, {"society": 0.1, "art": 0.1}),
    "of": ("OTHER", 0.05, {"time": 0.1, "city": 0.1}),
    "and": ("OTHER", 0.05, {"commerce": 0.1, "art": 0.1}),
    "in": ("OTHER", 0.05, {"cartography": 0.1, "time": 0.1}),
    "a": ("OTHER", 0.05, {"food": 0.1, "creature": 0.1}),
    "to": ("OTHER", 0.05, {"cartography": 0.1, "sport": 0.1}),
    "is": ("OTHER", 0.05, {"society": 0.1, "lake": 0.1}),
    "we": ("OTHER", 0.1, {"society": 0.1, "creature": 0.1}),
}

# Chinese entries: word -> (pos, pinyin, anchor topics)
CJK = {
    "北京": ("NOUN", "bei jing", {"city": 1, "society": 0.3, "time": 0.2}),
    "山": ("NOUN", "shan", {"mountain": 1}),
    "山水": ("NOUN", "shan shui", {"mountain": 0.6, "river": 0.6, "art": 0.5}),
    "山水画": ("NOUN", "shan shui hua", {"art": 1, "mountain": 0.4, "river": 0.4}),
    "河": ("NOUN", "he", {"river": 1}),
    "湖": ("NOUN", "hu", {"lake": 1}),
    "虎": ("NOUN", "hu", {"creature": 1}),
    "扇": ("NOUN", "shan", {"art": 0.5, "commerce": 0.5}),
    "草原": ("NOUN", "cao yuan", {"grassland": 1}),
    "长城": ("NOUN", "chang cheng", {"architecture": 1, "time": 0.4}),
    "地图": ("NOUN", "di tu", {"cartography": 1}),
    "冬奥会": ("NOUN", "dong ao hui", {"sport": 1, "winter": 0.6}),
    "奥运": ("NOUN", "ao yun", {"sport": 1, "society": 0.3}),
    "冬天": ("NOUN", "dong tian", {"winter": 1, "time": 0.3}),
    "建筑": ("NOUN", "jian zhu", {"architecture": 1}),
    "乌托邦": ("NOUN", "wu tuo bang", {"cartography": 0.5, "art": 0.6, "society": 0.5}),
    "岛": ("NOUN", "dao", {"sea": 0.9, "cartography": 0.5}),
    "水": ("NOUN", "shui", {"river": 0.7, "lake": 0.7}),
    "城市": ("NOUN", "cheng shi", {"city": 1, "architecture": 0.4}),
    "艺术": ("NOUN", "yi shu", {"art": 1}),
    "想象": ("NOUN", "xiang xiang", {"art": 1}),
    "梦": ("NOUN", "meng", {"art": 1, "time": 0.2}),
    "宫殿": ("NOUN", "gong dian", {"architecture": 1, "society": 0.4}),
    "雪": ("NOUN", "xue", {"winter": 1}),
    "冰": ("NOUN", "bing", {"winter": 1, "lake": 0.2}),
    "画": ("VERB", "hua", {"art": 1}),
    "花": ("NOUN", "hua", {"grassland": 0.9, "art": 0.2}),
    "申办": ("VERB", "shen ban", {"society": 0.7, "commerce": 0.7}),
    "的": ("OTHER", "de", {"society": 0.1, "art": 0.1}),
}

IDF_OVERRIDES = {"beijing": 2.0, "bid": 1.5, "winter": 1.2, "olympics": 2.5}

DIGRAPHS = [
    ("tch", ["ch"]), ("sh", ["sh"]), ("ch", ["ch"]), ("th", ["th"]), ("ng", ["ng"]), ("ph", ["f"]),
    ("ck", ["k"]), ("qu", ["k", "w"]), ("ee", ["iy"]), ("ea", ["iy"]), ("oo", ["uw"]), ("ai", ["ey"]),
    ("ay", ["ey"]), ("ei", ["ey"]), ("ow", ["aw"]), ("ou", ["aw"]), ("oa", ["ow"]), ("oar", ["ao", "r"]),
    ("our", ["aw", "er"]), ("er", ["er"]), ("ar", ["aa", "r"]), ("or", ["ao", "r"]), ("ir", ["er"]),
    ("ur", ["er"]), ("igh", ["ay"]), ("wh", ["w"]), ("kn", ["n"]), ("wr", ["r"]), ("dge", ["jh"]),
]
SINGLE = {
    "a": "ae", "b": "b", "c": "k", "d": "d", "e": "eh", "f": "f", "g": "g", "h": "hh", "i": "ih",
    "j": "jh", "k": "k", "l": "l", "m": "m", "n": "n", "o": "aa", "p": "p", "q": "k", "r": "r",
    "s": "s", "t": "t", "u": "ah", "v": "v", "w": "w", "x": "k s", "y": "y", "z": "z",
}
VOWELS = set("aeiou")


def phonemes(word):
    """Rule-of-thumb spelling to phoneme tokens; good enough for near-rhymes."""
    w = word.lower()
    if len(w) > 3 and w.endswith("e") and w[-2] not in VOWELS and w[-2] != "l":
        w = w[:-1]
    out = []
    i = 0
    digraphs = sorted(DIGRAPHS, key=lambda d: -len(d[0]))
    while i < len(w):
        if i > 0 and w[i] == w[i - 1] and w[i] not in VOWELS:
            i += 1
            continue
        for spelling, sounds in digraphs:
            if w.startswith(spelling, i):
                out.extend(sounds)
                i += len(spelling)
                break
        else:
            ch = w[i]
            if ch == "c" and i + 1 < len(w) and w[i + 1] in "eiy":
                out.append("s")
            elif ch == "y" and i == len(w) - 1 and i > 0:
                out.append("iy")
            elif ch in SINGLE:
                out.extend(SINGLE[ch].split())
            i += 1
    return out


# Each non-landscape topic leans a little toward one landscape category, so
# that classifying e.g. "winter" lands somewhere plausible.
LEAN = {
    "sport": "architecture", "city": "architecture", "society": "architecture", "commerce": "architecture",
    "time": "architecture", "winter": "mountain", "cartography": "mountain", "art": "lake",
    "food": "grassland", "creature": "grassland", "sea": "lake",
}


def embed(word, topics):
    rng = random.Random(hashlib.sha256(word.encode("utf-8")).hexdigest())
    v = [rng.gauss(0.0, 0.06) for _ in range(DIM)]
    for name, weight in topics.items():
        v[T[name]] += weight
        if name in LEAN:
            v[T[LEAN[name]]] += 0.25 * weight
    return v


def idf_for(word, pos):
    if word in IDF_OVERRIDES:
        return IDF_OVERRIDES[word]
    h = int(hashlib.sha256(("idf:" + word).encode("utf-8")).hexdigest(), 16)
    return round(1.0 + (h % 2000) / 1000.0, 3)


def fmt(x):
    return f"{x:.4f}"


def write_lexicon():
    lines = [f"#dim={DIM}", "# word\tpos\tidf\tphonetic\tembedding"]
    for word, (pos, idf, topics) in sorted(WORDS.items()):
        idf = idf if idf is not None else idf_for(word, pos)
        lines.append("\t".join([word, pos, f"{idf:g}", " ".join(phonemes(word)),
                                ",".join(fmt(x) for x in embed(word, topics))]))
    for word, (pos, pinyin, topics) in sorted(CJK.items()):
        idf = 0.1 if pos == "OTHER" else idf_for(word, pos)
        lines.append("\t".join([word, pos, f"{idf:g}", pinyin, ",".join(fmt(x) for x in embed(word, topics))]))
    (DATA / "lexicon.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")


GLYPH_COUNTS = {"architecture": 7, "mountain": 7, "river": 6, "grassland": 5, "lake": 5}
INK = "#2f2a24"


def glyph(category, index):
    rng = random.Random(f"{category}-{index}")
    def r(a, b):
        return round(rng.uniform(a, b), 1)
    if category == "architecture":
        w, h = r(10, 16), r(8, 16)
        tiers = 1 + index % 3
        parts = [f'<rect x="{-w}" y="{-h / 2}" width="{2 * w}" height="{h}" fill="#e3d3b4" stroke="{INK}" stroke-width="1.2"/>']
        for t in range(tiers):
            y = -h / 2 - 5 * t
            parts.append(f'<path d="M{-w - 4} {y} Q0 {y - 9} {w + 4} {y}" fill="none" stroke="{INK}" stroke-width="1.6"/>')
        return "".join(parts)
    if category == "mountain":
        peaks = 1 + index % 3
        d = "M-20 12"
        for p in range(peaks):
            x = -20 + (p + 0.5) * 40 / peaks
            d += f" L{round(x, 1)} {r(-18, -6)} L{round(x + 20 / peaks, 1)} {r(0, 6)}"
        d += " L20 12 Z"
        return f'<path d="{d}" fill="#a8b89a" stroke="{INK}" stroke-width="1.2"/>'
    if category == "river":
        lines = []
        for k in range(2 + index % 2):
            y = -6 + 6 * k
            lines.append(f'<path d="M-20 {y} C-10 {y - r(4, 9)} -2 {y + r(4, 9)} 8 {y} S18 {y - 4} 22 {y}" fill="none" stroke="#4f7ea0" stroke-width="1.8"/>')
        return "".join(lines)
    if category == "grassland":
        blades = []
        for k in range(3 + index):
            x = -16 + k * 32 / (2 + index)
            blades.append(f'<path d="M{round(x, 1)} 10 Q{round(x + r(-3, 3), 1)} 0 {round(x + r(-4, 4), 1)} {r(-12, -4)}" fill="none" stroke="#6f8f3a" stroke-width="1.5"/>')
        return "".join(blades)
    rx, ry = r(14, 20), r(7, 11)
    return (f'<ellipse cx="0" cy="0" rx="{rx}" ry="{ry}" fill="#c4dbe6" stroke="{INK}" stroke-width="1.2"/>'
            f'<path d="M{-rx / 2} {-1 + index % 3} q4 -3 8 0 t8 0" fill="none" stroke="#4f7ea0" stroke-width="1"/>')


def write_glyphs():
    out = DATA / "glyphs"
    out.mkdir(parents=True, exist_ok=True)
    for category, count in GLYPH_COUNTS.items():
        for i in range(count):
            body = glyph(category, i)
            (out / f"{category}_{i}.svg").write_text(
                f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="-24 -24 48 48">{body}</svg>\n', encoding="utf-8")
    manifest = {"category_counts": GLYPH_COUNTS, "dir": "."}
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")


if __name__ == "__main__":
    DATA.mkdir(exist_ok=True)
    write_lexicon()
    write_glyphs()
