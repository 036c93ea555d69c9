#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Writes data/lexicon/pt.tsv from the word lists below."""
import pathlib
import sys

NOUN = """
arquivo areia atleta baixo banco banda baquetas baquetas barco bateria baterista bola bolsa
cabo caixa campo campeonato cantor capô carregador carro celular cheque computador concerto
conta corda corrida crédito câmbio dados dinheiro dólar empréstimo ensaio escritório estrada
farol freio garagem gasolina gol guitarra guitarrista impressora internet investimento janela
jogo juros lago letra malas marcha mecânico memória mercado microfone motor motorista mouse
música músico notebook onda oficina palco partida pasta placa pneu porta porta-malas prancha
prato problema defeito quadra rede regata registros remo reservas ré saldo servidor show
sistema software som sábado taxa teclado tela time técnico tênis usb vela velas vento vídeo
volante wifi ações treino sinal roda luz
""".split()

VERB = """
abri acabou afinou amassou aprovou arrebentou atrasou aumentaram bateu caiu caíram carrega
chegaram chegou cobrou coloquei comprei descarregou entra esquentou estava está estão falhou
fecha fechou ficou foi funciona funcionar furou içamos morreu paguei parou perdemos perdeu
perdi piscando preciso quebrou queimou rachou rangendo rasgaram rasgou reiniciei reservei rompeu
salvei sentou subiram subiu sumiu terminou transferi travou treinou trocou troquei venceu
vendi voltou é da tocou vamos vai tocar acho precisa ouvi comprou viu
""".split()

ADJECTIVE = """
adiada alta alto apagado aprovado atrasados automático careca central cheia cheio completa
desafinada desafinado desconectado duro empatada encharcado fraca gasta lenta lento ligada
molhada negado negativa nova novo preta quebrado rasgado ruim suja sujas torto favorável
""".split()

ADVERB = "antes cedo demais hoje mais muito não ontem quando depois então também já".split()
PRONOUN = "minha eu meu ele ela nós".split()
PREPOSITION = "com de do dos das na no nas nos para sem em durante".split()
ARTICLE = "a o as os um uma".split()
CONJUNCTION = "e mas ou".split()
INTERJECTION = "ok oi".split()

# Words that take a second tag in some uses.
ALTERNATES = {
    "baixo": ["adjective"],
    "alta": ["noun"],
    "conta": ["verb"],
    "time": [],
    "vela": [],
    "porta": [],
    "caixa": [],
    "marcha": ["verb"],
    "remo": ["verb"],
    "a": ["preposition", "pronoun"],
    "o": ["pronoun"],
    "som": [],
    "da": ["preposition"],
}


def main() -> int:
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data/lexicon/pt.tsv")
    entries = {}
    for tag, words in [
        ("noun", NOUN), ("verb", VERB), ("adjective", ADJECTIVE), ("adverb", ADVERB),
        ("pronoun", PRONOUN), ("preposition", PREPOSITION), ("article", ARTICLE),
        ("conjunction", CONJUNCTION), ("interjection", INTERJECTION),
    ]:
        for w in words:
            if w in entries and entries[w] != tag:
                raise SystemExit(f"conflicting tags for {w}: {entries[w]} / {tag}")
            entries[w] = tag
    lines = ["# Portuguese lexicon: surface<TAB>primary POS[<TAB>alternate...]",
             "# 'da' is listed as a verb (dar); the tagger's contraction rule retags it."]
    for w in sorted(entries):
        alts = [a for a in ALTERNATES.get(w, []) if a != entries[w]]
        lines.append("\t".join([w, entries[w], *alts]))
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return 0


if __name__ == "__main__":
    sys.exit(main())
