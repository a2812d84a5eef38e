#pragma once

// 1797 handwritten digit glyphs, 8x8 pixels at 16 grey levels, packed two
// pixels per byte (low nibble first) and base64 encoded. The class byte of
// every glyph follows the pixel block. Source: the UCI optical recognition
// of handwritten digits dataset (test fold), public domain.

namespace s5rf::detail {

inline constexpr int kDigitGlyphCount = 1797;
inline constexpr int kDigitGlyphSide = 8;

inline constexpr char kDigitGlyphsB64[] =
    "ANUZAAD9+gUwL7AIQAyACFAIkAhAC8EHIF7KAADWCgAAwF0AALCfAADzbwBw/y8AAPE/AADxbwAA8W8AALCvAABAzwAA8+8AANj4"
    "AABhvwAQ2B8AkP8FADD9vwUAMPsJAPcdAIBtTwAg0Q0AAPIbAAAQzAEAAKEIAEjlCQDXnQAAEAsAAHAIAADRJgIA95AIUK/wBkD/"
    "/QEAMK8AACBPAACsAAAA/u8AAP2vAQD7fwAAQPcHAAD0CQBF/AQA+a8AAMANAAD1CAAA/QMAAN4AAADPJwAA/f0DAPf7CACRvwMA"
    "h/0fAHe0DAAA2AFAiP8GIPtPAADwBQAA+QEAAF0AAADpGAAA7M4AAKnwBADz7AIA9C8AMI/aAhAf8wgA+78BAMsAACD/3wAwz+oA"
    "EB/8AAD9+QIAMJALAAD5BADJPQAAkb8AAPvoBiCvkAkQT4AIQE+ACBBfsQMAzKoAAKE9AAAA3gEAUP8CAODPABD6zwAw7J8AAFD/"
    "AABA7wAAEP0BAMUBAADvBwAAHQwAIAoOAAACHwAAYA8AAPmfKACz2Ewg+Z4DQI35CABg/gMAsC4AACC/AAAA8gQQZf0GIMy9AACA"
    "HwAA4R0BAPrzC3B/8QiQ3/4FEPrvAAAQrwAAoE8AUNz/ArD/SACAvgEAgP8OABBmDwAAUD8AEPUNAED/AgAAgB8AAMAOAADzBwAA"
    "9gIAAPffBQD/mQ4A4ykvAHD/CwCBrwAw/e4AUArKAABTrwIA//8MEMiOAwCgDQAAsAkAAHqdAACp/AIAtLoAAPEaAADcBAAAHAwA"
    "ECoOAADrBQAA5gQAAPsKAADoLwAAwbwAAACwAwAAUAsAQXQvAPffGwDTewAA+/8CQJ/hAkAP8AIAH8AIAJ/QBgDp6QEAwk0AACD/"
    "AgBA/wIQxM8AcP/PAACj7wAAgM8AAGD/AgAg/AQA+AUAEL0PAAAKPQAAEx8AAJAMAADzBQAA/ogDAMfMHRDI7wQwi8gMAADSBwAg"
    "zwEAAF0AAADZAACH/gAA/isAAAAsAABgHgAA9IcAAJ3wBmCv+wAApf0AAAD2AAAAjAAAjHgAMP97ACAeAABQXgAAIP8JAAAgLwAA"
    "hE8AAOsJAADRPgAA+C0AIP8DADDPAQBQ7wUAMP//BhD+/wwAw+8HAIDuAgBg+gsAAOAKILj8CID//wcAAPsBAJB/AADAHQAAugQA"
    "APrdAQC44AQA0N8AEPsPABA/qQAAbq8AAOgXAADZBwAA/C8AANxvAAD27wAAAPIDAACQCgBz7C8Ax8wLAOo7AEDf5gFAL7AHgA+g"
    "BYAP4ASAD/EBQB/7AAD7PAAA0ggAAPZvAAD1vQAAcP8AAADgAwAAcAsAMEQvAPLtLSD9/wtQr0UBYH8DAJD/bwAwSPsAABD8AADU"
    "bwAg/wgAYF2IAYD//wZgn0YAYP9fAABUzwAAMJ8AENg/AED/AwAAUC4AANELAAD1AgAA9gUAEP+/ASDtwQkA9NcJAFD/AzCPaABA"
    "/98CMJ8CACD/PwAAZ5wAABCuAADlLwAQ7wEAAOYqAAD//QMgr9AJEF/ABQA/0AYQX9YBAL+uAAD3GwAArQEAUO8HAECPDgAg/m8A"
    "AEHZAQAA0AYAhZUOAN3/DQB3/QQA3cYHAEq6AQD4CgAw/gAAgLgFAECaCAAQ+wYAEPl9AHBOygBgn78AALnnAAAA8AIAALAGMI3l"
    "BQDprQEAq0wAANz5AQDX+wAA8U4AAPoNAAB+fABATtwAEOtMAACQHwAA9AwAAO+yA0Cf9AqQv/0CAPnvAACAbwAAkC8AAABcAAAg"
    "zwAAwb8AIPyvAGBbbwAAEJ8AACC/AAAwjwAAkM8AAHTnAAAA0ANAidoBQP//BgAAPgAAkAwAALAHAAD5/wUQrvgIAAD3AzC4/wuA"
    "/78DAPIHAAD4AQAArQAAAPltAABW/wAAgF8AAFA+AAAA+QIAALAMAIT7DADrjAAQTwAAIP/vAmC/iANQvwUAAOseAABQfwAA9k8A"
    "AO4EAAAQmwAAcN8AAOSfAKC/jwAAMG8AADCPAABQrwAAIG4AAPI9AAD6+wAwb6AAQI8wCIA+QAgwHzAHAL7mBQDEbwAA8R0AAPeO"
    "AICc0gJwGWAGUAkwCQAvgAwA+f0GANCOAABQzgIA9+gEACbTAQAQTQAAsQkAgN8AAFD+KwAAYNwDADCvAQCw+gQAwPEGADD0BABg"
    "bwBA/wkAAP2fAwBA6QcAw/8GALr3CwAA4gpQi/kDkP//CRCUbwAAsA4AAPQFAACEXwAA+bgAAKXQAgDQ9AIAkI8AAPheAABfTgAA"
    "9hwAABDuAwCg2wgAcNAIAAD3AUDITwBg/wYAAMJMAgAQ/QUA4l8AAPr/ATCv+gRQD+AGUG/ABxDf1AYA+/8AALJNAAAA3AEAgP8C"
    "APrPAED/3wBAR28AABCPAAAQjwAAAMwAABC5AADQ/wAAwOcAAAB+AADFDABw/wYAQNm/BAAA2QMAoB0AEMsHACDPAABAvwAAQP9I"
    "AED//QYA99cOAHD/BRD6GwAwiMsAAFD+AQCwLwAAQC8AAACsAABD+gEA/a8AAPpOAABk/QIAMJ8AABBvAAAAygAAAPEEEFn2BwDO"
    "vwIA1m8AMO//AQAF+AIAAPgDMP//CVDtvwMAwB8AAPQHAAD+bgAAp/8DAFD/AQAgjwAAANwBAAD0BwCV/gcA/a8BMP9+ARCZ/wQA"
    "cM8BAJAvAAAwfwAAAPkAEKr/AyD9XAAAYE8AANEfABD7BQCAr6AGwI/5DCD//wcAQL8AAHA/AACQCgAA9wcAAN0BAAB/AABA/3wA"
    "IM+0CgDolQ4AYOwJAKALAAD5BgAA3wAAAK4AABDPKAAA/P8aAPfMTwCQzwUA5QAAAJwAAAA/AAAQDwAAEC9HADD//wkA/6QPAOTP"
    "BwCQCQAA8wkAMK4gAKBf9wEg+98BAHA/AABgDwAAQF8AAMZtAGCf/AJwn98AAPtPAADACgAA8wQAAPECAAC2AAAAAH4AANCfAAD6"
    "fwBwjy8AEGVvAABAbwAAIG8AAAC8ABD9zAVAj2gAcA0AAIDffwAQVsgAAAC8AADSHgAwrgEAANEKAHD/fwCA3/oAgC/yA1AvwAcQ"
    "b/IDAPv9AADxjgAQ3AQAQP8/AED/rwAA9v4AAADwBAAA0AcQMucKIPzOAwDdKABQ/88AEM8AAADcFwAA+M8AAED5AwBR/gEA+m8A"
    "AADZAAAg/wEAUPkAAADlAAAwfwBw/wsAAOt/AwAA+Qkw5W0AkM/KAGA/vAAQrW8AAPoKABD/CgAAzw8AAPNfAAAA+wQAMP8MAID+"
    "DABQ+gYQt98AkP8eADDonwAAEPsMAMoKADD/TwBwP9gAgAzgAYAMcAhQDUAIAI6gCADHzQQA5AsAMP+fAIAN8wGADIAGgAyACFAd"
    "gAgg7/wGAPWPAAAQ3gEAEP8DUPv/AED//wAAgH8AAKA/AACAbwAAIP0CAOPvAADd/QIAAfkAAMn/CkD/vwMAlC4AAPIJAADUAQAA"
    "oD8AAPcLAAD9AQAAvwAAAN8YAAD//wYA+v4uAJH/CyD9SgAARf0CAAD7BAAAzwAAAL0AAADYABCGzgAg7BsAEP0CAGD/CQCQqA0A"
    "UMMMAADzBgBQ/wEAYP/MCxDb/wwAEF8AAFC/AADAvwBw/H8AQMhPAACQLwAAoC8AADBdAABy3wEAzukIAALACAAA0AZQ//8FIHXt"
    "AgAQXwAAsAkAAJBPABD5LQDg7wgA8V+fAFD/jwAA0h8AALANAACwDQAAoAsAAPMKAAD4AAAA7AAAAP5vAAD8/AYA99oOAJC9BgD9"
    "TwAAif0DAAD9BwAQzwAAAK8AAAD4AABj/wcA/78BABCMAQBA/wEA0b8AEPvPACCMrwAAAI8AAEBPAAAwTQBA/s8BIHz+BgBQrwAA"
    "QH8AAEBvAAAQvwAQqK8AUP8fAADZXgBAr/0AAP3+AQAw9wMAAPQAAADxAxBf+AIA958AALBfAACgXwAA9F8AsP8/AFDoLwAA4C8A"
    "ALAvAACAjwAAw68AIM7MAFAKugAAEJ4CAPj/CgD2fQAA8AUAANUAAACwjwAA9j0AAPgIAAD9AgAA/wUAIP9fABD67wAAwP8AEPmv"
    "AGCP9wMA678BEP0GAID/AwBQrgsAAH8/AAD7CAAAMB4AANAcAAD3NQAwv/UCUL/7BgDG3wMAEH8AACB/ACD/3wIQiv4IAAD/AQAA"
    "jwAAAO4AAAD7ASDe/wMg/14AAPENAADxXwAA9w8AAP0NAHD/DQAQ+w0AAPIPAADhPwAAIA0AAIAPAAD1JQAAz/EEQC/5CADq/wQA"
    "AI0AAABtAADBBQAA+T4AIO/bACCv4ARAD8AEQD+wCgDN6AYAo88BAPyPADDfWAAgPwAAAN8JAAD6fwAAENoAALKvAAD7DABA/c8D"
    "MEf9BgCAXwAAwAgAAHAMAABADAAQxwsAMM8CAACATgAA9wcAAK4AABBvAAAw/woAIM9uAAD8qwAAoI0AAPkFAADtfQAA5toBAJD8"
    "BQAAoAoAAHAOAIP5DwDFnAEAUBsAAOAuAAD1BQAA+AIAANoAAAD+jwAA9vkGAGD+CAAApgAAAP4AAKD/AAD3/wAwf68AAAC9AAAA"
    "nwAAAPgAALJPAACc+wEAAvQAACD4AUD//wcwRj8AAGALAADABwAA/88CIP/MA0CPAACAzwQAAPwPAAAwjwAglo8AEP8/AACgDwAA"
    "+wMAcE8AAMAbgwJA/P8JAICPAgCgDAAAwAkAAKEJAAD5BAAQXwAAQB/kBEDP/gUAcZ8AACBPAACgDQAAs98AMP/9AGAo6QAAdO8F"
    "QP/vBhDYDAAA8QQAAPMBAADyHQAA9n8AAGOPAAAwbwAA0Q0AYP4EAJD/rQMAtP8KAJRdABD/vAAAi/UAAKetAAD0DQAA/QwAAJte"
    "AACgjwAAgI8AAPP8BACi8QQAAOgAAJA/ADDvBABA7xcAAJDsBAChjwAA2/oAABz0AQABfQAAkAwAIP0BAEDvRwAAsf4FIP/vAjDv"
    "qQFwbwAAMP4GAADRDAAAgA8AAPkLADDfAQAAyf8CEO/7BwAC8gQAQvoCAP3/CQD9GgAA9gEAAJsAAADAHgAA+VoAANjlAADi/wQA"
    "AKQKAABADwBilA8Asf8HANYCAED/vwAAvGEBAOwqAACBzAAAAOkAAJRfAADpBAAAwA0AAPUKAGDfywLAr/8JQP7PBADgDQAA4AwA"
    "ALANAABjXgAA998AAOPNAADwHQAA8ggAAJoOAABMLwAA9A4AAOVPAAD47wAA9Z8AAPAfAADxDQAA+14AAMz4AQD1/wIAgA4AAPUL"
    "ABDvYQBwX/MIgI/+AgDmvwAAYE8AAKAPAAD8BwAgXzwAAG7zAgDizwAAAKoAAACKAAAofQAA+z8AAMMaABD/rwBQ3/YBUH/QA1BP"
    "0AcQj+AHAO39AwDSbwAARakAAIr7AgDI7gEA9QcAAM4AABDeAwAA3AUAAPcFAACxjwAA7PoFAH/9BAD5/QQAAPEEAADwBIDv+QQA"
    "ov8CANdfAAD4zwAA9z8AAPYFAAD1AgAA+AYAAMwNAADVCgAAwgkAAPtcAABf4AAgH5AHQApwCAAMgAogX/oBAOVMAAAA9QgAIP8J"
    "APP/CnCv+AcAAfgEAAD7AQAA+QEAAOgAIP8GAFD/DgBQrQ4AAMAMAADxBwAA+gIAMK9oASD//wcw/8wGAETlCAAAuwAAQD8AAAC8"
    "AAAA6QAAc08AMO8EAAAwPwAAwC8AAPhPAHD/zwuA/98DAHAeAABgDwAAQA4AQP+vA8CfyAOgLwAAMM8AAAD3CQAAwB8AMPofAEDf"
    "AwAA8gQAANsAAABvAAAwfwAAQP9fAEBf0wcQnoANANL/CADyPwAA6L8AAADrAAAA6wMAxP8HAPscAADhBgAAxAEAAMUtADDv3wFA"
    "n88BEPkfABD9XwAwX/wAMH/OAAD2PQAA9QUAALyNAACb+gAA8/8BAADgBgAA0AgANuAGANL/AwCcHAAA/o8AMJ/zAkAf8AVQDPAF"
    "MB70BADP7gAAxywAAADXBQAA/wgA0f8DAPz/AIA/3wAgA88AAADfAAAAyAAA7RgAEP9vAABTjwAAkC8AAPEJABDfAABQv0QAEO3M"
    "AGD/fwAgy/8FAAD+AgAQvwAAAO4AAAD1CQBz/Acw/78BAFAOAADxDQAA+Q0AUP8NAID//wkApI4FAIAMAABwCgBA//8EQP95AQDv"
    "AQAA9QkAAOAPAACQXwAw2k8AUP8MAABgHgAA8goAAPsCAADdWAAg7/wDEL9QDAD7xQwAkO8GAPMeAAD9bwAARI8AABCvAQD3/wgA"
    "/G8AAOALAADEAQAA0z0AIM68AECP9QMQ7X8AAPsdABDP7QEA3fkHANOvAQDWSgBA/90AQO//ASD6/wUAAPMFAADwCAAg+AgA954B"
    "AMIEABD8PwBwb9QAgG/QBRBfcAkAj4AMAO3+CgDkfwAAAOUDAAD5CACQ/wUQ/fwBQDz6AAAAywAAAMgAAADVBADWOgBQv78AIAbP"
    "AAAAzwAAcG8AAPUKAAD7SAAA6M0EEMtuABBG+AcAAPMFACCeAABAfwAAEN4AABDsAFD8GQAAMD8AAKC/AAD0jwAgzl8AoO//C1Dc"
    "jwMAID8AAEAMACD+3wVw34gBoA8AAKAPAABwbwAAEPwIABD4CgAw/wEAAPAHAAD2BAAA+wAAAMwAAAD/jwAA/P0IAPzXDwCx/wkA"
    "+h4AAP5/AABRfwAAor8GcP/PB7D6CgAA9gIAAJ0AAADSHQAA+E4AAPWKBADxrwIg3wwAUDwfAAA+TQAA8x0AANUEAADvXgAAfPgB"
    "ANT/AQAA8AIAAOAGAHL4BADGrQAA5XoAAP//AzCv8gdwP8AIgB/ACHBf8gQg/94AAPctAADSBgAA9F8AAPH8AACg/wEAAPICAADw"
    "BQBE9gMA4q8AUP+/AUD/igFAzwAAEP0FAAD2DQAAoE8AANQvACD/CQBg//8KkN9oBcAfAACgfwAAMP8DAADzDQAQ9QkAkL8AAADV"
    "AQAA3AAAAI8AAFAvAABAj58BQP/8CxDv5AsA5a4BIP/fAnDfiANATwAAAL8AAAD8AwAA0gsAMPgIACD/AQAA9R8AEJ/KADAf8ARg"
    "D7AGMB+wCEBP8wQQ3e0BANQeAADSaAAA5/4AAJfzBADl/wQAMNIFAAPABhBssAcAw/8BAPY9AADtzwAAvv0FAPmPACD/LwCAL64A"
    "UJ++AADoLQAA9gYAAL5NAAB71wAA9f8BAADgBwAAoA0AsrAMAPWeBADSBAAA6AsAAGpeAgDi7AAA8S0AANseAACNSgAAsn8AAIAN"
    "AADxDwAA9w8AEP8PAGD/nwJg//8LALAPAACgDgAAAP4HAFD/CADB/whQ/v8FEHT/CAAg/wcAIP8DAAD/AAD3/w0AmPgPAAD0BwCE"
    "/AUw/+8HAIM/AADwDQAA9wMAAIH6CyD+/QcABuYCADDLAgDy/wgA0y8AANAKAADxBQAQ+r8AUIr8BAAQ6gAAYE8AAHBfAAAQ/AQA"
    "QvkEEO9LAHD/vwJQz2gBkB8AACD/AwAA9R4AACCvABDXPwBA/wYAAAC8AQAQ/wcA4f8HEP7+CFA8+AcAAPgEAAD4AQAAywAA9j8A"
    "MO/eAGAv4QWALpAIgE+ACFBvsAkQ//4JAOWvAQCgHwAA9a8AAG72AEBP8ANQX7AFALzQBQD4/wMAgY0AAPdPAID/TwCAj08AAKAP"
    "AADxCQAA9gIAAPi4CQD5zwMQ7AoAUP9PAABATwAAcB8AAPIJAAD5AgAA74gDAPqdBAD1LAAAtK8AAAC+AABC7gIA/a8EAKMOAADw"
    "BQAAtgAAAPU9AAD87AAAzO4AAPM+AADpPwAQX8gBAE/0BAD1zwIAywAAcP8FAFD9CAAA8QgAAPcFAAD5AQAA/3kCAOzNBQDyDQAA"
    "/Z8AUJ/2BFA/4QdgT/AIMM/2DAD+/wQA0o8AABDrBQCQ/wUA+v8BUP//ABC1/wAAUP8AAAD7AAAAqwAA+QUAYP8PAHDvLwAwxg8A"
    "APAMAAD3FgMA+f0IAPePAQDkBgAA+gIAAL8AAAC9AAAwzzgAIO/ICQDfxAwA9s8BQNxtAGCO/QAAAPsCAAD/AAAA/AMAAPQJAEH8"
    "CCD9bAAg/wYAANpfAAAgnwAAML8AAADtAQAA9wUQZP0BMO8rAAD/AgAA+AsAAMAOAADH3wlw/68FEPUOAAD5AwAgTwAAEPrfA1Be"
    "9QgAAPIGAAD5AAAA+QAAAPQGADLNAADfBwAg/k4AQFvNAAAgfwAAQE8AABDdAQAA8gQAMfsCEPwpAAAAWwAAgC8AAPQ/AABsPwBQ"
    "D18DYP+/BAAADgAAACwAAGA+AADyCwAA+wIAEN8CADD/fwBA79gHAPzFCgCA3gUA4QYAAPcBAACtAAAAfgAAMK84AADf7AcAnrQN"
    "AMLPBADiCwAA+gEAEJ8AAEBfAABQz7wBQO/qCyCv9goA868BACBPAACAHwAA4QwAAPYMAAD9TwKQ//8LMIg/AAAwDwAA9gUAEP8/"
    "ACBv6wAA7/8BAIP6BQAA8wgAQPoIAMfNAQAAywAAMO8AALC/AAD5rwBAz88AMDq/AAAA7wAAALsAIP/vBZC/hgOQLwAAMN8BAAD4"
    "DAAAwE8AALFvAED/CAAA9BsAIO6PAIAv0wBAD8AHcA/ACDBv4QkA//8CANRuAAD6BwBA37sAoM//BDDM/gQAAPoEAAD5BABE/wAQ"
    "/DwAQP//BbCPhQOgLwAAMG8AAACfAAAA/AIAAPYLAEDPAQAA0ywAAN6/AAAH+AAAAG0AADBPAADQCwAA84wBAPOLAADaAAAA/gsA"
    "AJyPAgDlvwEA8woAALwPABB/XwAA+x0AAOULAAD/DwAAih8AAGAOAADACQAA8QMAAPi8AAD3fAAAwiwAAPqfADD/+ANgb9AIgE/w"
    "CFCP/AYA//8CANM8AADgBwAQ+T8AQI+7ADB/9ASAT/AIUK/QCwD9/wkAom0AAADnBwAw/wkA9v8GUP//AkCI/wAAMP8DABD9AAAA"
    "+AAA+A0AAOdPAADB3xwA++8JAPoeAADgCQAA8wEAAJwAAADjAwAA3QAAAH8AAFA/AAAwfyQAQP//BxD+tA8A5c8GIP5sABCK/gEA"
    "APoCACDPAAAwzwAAAPsCAKf/AjC9JwAA+gkAQP8PACCcDwAAsAsAAPEHAAD5AgAA/1gAAPv/AgAA9wEAAPsAAADvAACg/wAA/L8A"
    "UG/PAAAB/AAAAPQEAPkDAAD7HgAAsE8AAICvARD8/wkQ+0sAAPYEAAC7AAAA/zsAAKT/AwAA/gUAUM8AADC/AQAg/QkA9s8DAO8X"
    "AAAA8wYAAPsHAJD/BAD6/wRAf/gEEAT6AgAA9wEAAPMBEMyNAQCY/wIAMK8AAHBvAABQrwAAAPcHAIPfAiD+GgAA+wgAYL+dAHAP"
    "+QAgz/8DAHX3BAAA9QUAc78AAP0bAABA7gUAkP8HAPX/A0D/zwBQ/88AAMDfAQCA/wcAQP4GAPT/BQCW+wsAAPMFADD+CgD3vwMA"
    "+A0AAPUHAADnAgAAgBwAAPEcAAD2AwAA9wEAEP9eABD85gkA8qYPAGD/CwCgPAAA+O8AAPX6AQD1rwEQz48AED/0BAC89AkAot4E"
    "AHAfAADwHwAA+S8AIP8PAKD//wiA/44FALAMAABgHwAg+48BIJz5CgAA9AkAIP8AADDvAAAA/QMAtI8AMM8EAAAQvwAAEP8EAID/"
    "AAD6/wFg7/8AEFPPAABAzwAAIM8AACCPAACwTwAA+Q8AMP8PAMD/7wZg7M8FAIANAAAgHgAAxBoAMN+vAFAv4QOADaAIgAyACIAO"
    "sAgw7/0CAPhdADDfjAFA78wCAE8AAACcAAAA9wMAAOAIAAD1CgAg/wIAALX/CADvyA8AAOIJAADLAQAQXwAAEJ4AAEGfAAD3KwAA"
    "sA4AAPoEABC/AAAwzygAcP/sA0CPoAkQ/OkKAKK9AQD1BwAA/l8AAO3+AACz/gMAAPYCAAD0BwAQ+wYA9K8AAPMEAAD8AgAQfwEA"
    "MB8WADCP3AMgL3AMAJ2UDwDT/wUAANoHAFD/CwDk/wcw/v8EcP//BADS/wMAsP8AACD9AQD5XwAA/98AADC/AABy3wog/88EMP0K"
    "AAD3AgAA3AAAAP18AED/zANAXwAAMJ8AAAD/AgAA9A4AEOkPABD9CgAAMB0AAIA/AADxTwAA+B8AIO9fAbD//wpQuE8BACAvAAAA"
    "nwAAgF8AAPFfAAD7HwFg//8JcP+vAQBxHwAAEF8AAPcGAADiLwAAUG8AAFCfAlD+vwRQxwsAAPQBAAC6AAAg3wAAwP8DAFD9BAAA"
    "+AQAAPgEAAD8AAAA/+8GEP/PBwDCDAAA958BAOb9AwDxTwAA9w4AEJ9fACDdrwAAsVwAIP8FAFD/CwCQ/wwAAPQGAAD4AgAQ3gAA"
    "QO/+BSD+nQEA5E8AMP9vAIDPfwAwxQ8AAPAMAAD2AgAA+FwBAPT/BDD7fAFA35sGQA8AADCPAAAA+wgAANAMABD3AwBQbQAAQJ04"
    "AFDvzAaAHwAAML8BAAD4CQAAoA8AEMEOAEDuAwAAAL0AAIBfAADzTwAA+K8BQO//C3Df7wMAAL8AAAC8AADjHQAA+Z8AAPj7AQDi"
    "/wIA9m8AAL/KABC/+wAA1X8AAPIaAAD3zwAA8/8AAPIOAAD4bwAAjdkAAKz3AADTrwAAUD8AAPFPAAD6HwAw/08CoP//DBDnbQUA"
    "sAwAAEAKAAD3GwAQz8wAIC/2AhBv9gYA9/8JAADACwAz9gUA+G4AAOINAAD6jwAgf/QAQE/QB0AfoAhAX8ELEO/9AwDDXQAAwG8A"
    "APX9AADyzwEAsO8BAPevABCP4gUArMQHALLfAwDDBQAQ728AYA/2BlC//gQAqPwAABH3AQCo+gIA0n4AAOUvAADtqQAAj/IDAMvp"
    "AgD3LgAA7U8AMI+uAAD2jwAAtI8AAP3bBzDPQAhgX0AIcAmQB0AK8gIQz64AAOQeAADQjwAA8a8AAPGPAAD0LwAA+w4AIP8KAAD9"
    "LwAA0U8AAOYIAGCvTgCwBUsAQCYvAADQBwAA5wAAAKyIBADn7g0A+hoAYG4/AFBUDwAAwB4AADD7AQAAoAgAifgGAPmfAADABAAA"
    "9gIAAF9ABEAv8wkg//8EAIKPAACADwAAsAkAAIbsAFD/fACA3wQAIIu+AAAA8AEAAOAFEInsAQD6PAAA0wYAAPoCACA/AABADgAA"
    "QO7fAjCfQQwArrULANOPAAD2/68Apug/AAD0CACi/gYA9v8HAPAJAAD2BgAA2gEAAKHdARCt5ASADccAIOwvAAD1LwAAeNMDAIjQ"
    "BACx/wIAxl0AIJ/4AoAM8whAz98BACJvAAAQHwAAUA8AAPMOAADUCAAA/X8AMJ/2BoAOQAiADEAIQAywBgCu7AEA9ysAAABOAAAw"
    "vwAAoJ8AANB/AAD8TwAQzV8AAECfAAAArgAA+gsAgK8vALArXwBwZT8AAPEKAAD6AgAA7KgFAPz/DwD2rwAwv68AQKpPAAD0PwAA"
    "kf8CAADzBgCT/AUA+Y8AANAMAAD2BwAA/xEEYK/5DpD//wQgyJ8AANAPAADgHwAA//8JYN/MKzDvAgAA9gUAAOALAADACAAQ7goA"
    "AP0DAADQCQAA+AUAAI4AACA/IAAA3/8GEL90DADL1QkAwb8CAMSvAADPvAAAAXkAAHTfB2D/rwMQxAcAAPICAADGAAAAwq8AAHzR"
    "BDAPyABAvx4AAPcGAADGLwAAeE0AANM/AADk/wFQj/QHgA30DHD/3wMAxk8AALAMAADwBwAA8wIAAPWMAAD92gNQn4AEQB1ACEAI"
    "gAQQDrADAJz5AADkTwAAQN0AAKD/AQDj3wAA+F8AMP9PAED/bwAg+J8AAEDOABD9TwCQb40AUAqsAABgXwAA9QoAIL8AAFDfiAUQ"
    "6v8PAOhOAFBMxwBAMl0AAPAfAAAw6QEAAHAIAEPUBwD7XwAAsQMAAPkAABBfEAJgL9EKcJ/fACDJHwAA4AkAAPIHAAB7/AEQ72kA"
    "gAwAAFD+XwAQRpoAAAC0AABKjQAA/BoAAMQBAADeAAAgPwAAcA0AAHB8bAJA/9wLEP21DADVvwEA1P+vAPvcXwAAwAsAAfUCAN7/"
    "BgD/nwIA8QcAAOYCAACyzwIAe3QIUE6ABCCftgAA8wsAANkLAACsHwAAwj8AAPksAAA/pQAATf4EAPT/BwAwpAQAAIAGABzRAwD4"
    "nwAAws8BEO6+CFA/IAiADmAIQAyQBBAf4QEAm4sAANIeAACzXQAAyvUAAKf2BADS7wYAAHAJAABACwB5gAsAk/8GAIbYAxDunANA"
    "jwIAQN9/AAAA8wAAAPMAAIaNAAD5CAAAg5kAYM9YALANAACQrwUAAIOtAQAAoAcAJdQIAPeOAACALwAA9gUAAIwAAABtAAAAzO8A"
    "AP6GCzDspQ0AkN8FELVPAIDfJgCwBwAAsP8rAABExQMAAFALAGGgCwDC/wIA+e8BEP+lB2AfEAiADUAIcAZgBlAJ0AEAX8wAAPga"
    "AADXfwAgb8UBQAzxBBDM/QMAQNgAAADUAAA4qgAA9j8AAPSuAQCXkAgAm9IHAPROAAD2HwBAHn0AcB3VAADn/wEAxM8AUI/EAsAG"
    "0ARg3/8HAEOBCAAAQAwAmJIJANL/AwDFrwEgfpQHcH+QCBD12wMA818AAJ98AABfyAAA5L8AAHAKAADzBQAAuyACUC7RB3Av+AMw"
    "/o8AAHAPAABgLwAAxwkAAPwfAAD7DwAA/A8AAP0PAAD9DwAQ/h8AAMScAAD2nwAAnrwAAAFpAABhrwYA+r4FAPUCAADTAAAAhwAA"
    "ALH/CgDtyAsABNAEAADzAADy/wkA048BAHAKAADQAwAA988AQL/MACAXvQAA0G8AALD/AwAA8QgA9fwIAPffAgDm3gsAzkUCMP8E"
    "ACC7PwAAAKcAAACxAABzjAAA5xsAAKANAADQXwAA8E8AAPN/AAD3nwAA+a8AAPrvAABR9wgA0joAAPrcAQBPYAQgPxAHUF0gCEAM"
    "MAgAXdYFAOWNAQDVXQAA//oDUC+BBEANQAiADGAHUA9wBwCP9QMA5Z8AIP8HAKCvLwCQWw8AAMALAAD1AgAwjwAAgF+FAzD//woA"
    "9S8AMJ9fAFAZHwAAoAkAAPEDAACZAAAA62cCAPb/AgCz/wQAyfwJAADxCACQ/gkA8e8FAGBPAACwDgAA8QcAANTvAiBf5ASAb/EB"
    "QP+tAACRrwAA5OMGAKnTCADzvwEA9z8AcJ9+AKAJXgAwQy8AAMALAAD2AwAA/IgDAPr/CQDUewAA/v0CUE9QB4AOQAhgCUAIIB6A"
    "BgDN+QIA81wAAADrAwAg/wIAsO8AAPP/ABD93wBgn98AAAD8AQAA6QEg+xwAkJ9PAOBHHwBglQ4AAPMFAADtAAAwv8gJIP/fHwDD"
    "AwAA7QIAMAoAAAAwNQBA+v8EYE+ACQDPlAwA0u8EIPsvAMDPTwAwYy8AAPIMAADzzwEAEPYKAMboCxD/vwMA578AIL/7AgAznwAA"
    "oI8AADD+AgAA8QYAw/0CAPZcAAD1/78AllWPAACQGwAw9gMA9f8HAIRPAQDRCgAA8wIAIP2/AKBLzAAQQY4AAPKPAABw+QgAAKAM"
    "AJX6CQD/fQAQ+m8AcJ7MABBRXwAA8z4AALH+BgAAwAsAh/0FAP9cAADhCAAA+AQAEJ8QBYBfwQ+gz/sGMP6PAACwHwAA0A4AAMII"
    "AADcBQAQHwAAIA4AACBfqgQA72gNAJ1CDgCj/wcA0h0AANkFAABdAAAALwAAAK+ZAgC/uAwQvkENALP/BADRBAAA9QIAAHwAAABu"
    "AAAAz/8HAO5GHgDpQy4Acf4LAPQGAAD8AQAQvwAAgD9wBMBv+wdw/z8AAPQKAAD0BgAAkP8JANrEB1Ae8gNAzv8AABF9AABAHwAA"
    "sAgAAMAEAADxGwAA8n8AAPZfAAD4TwAA+Q0AAPsNAAD7CwAA4T8AAKJPAKH/TwDwrwEA8P8HAFBbLwAAAJsAAKOfAADyLwAAhVsA"
    "AP3MABCfkAMwb2AGMBtQBgAMsAYAXvwBAPYtAADjjwAwj/QBgArzCDDf7wEAUk8AAIALAADwAgAA0gAAAIX8BDC/FwAwbgQAUM9u"
    "AAACxAAAAKQAAIZ+AADXBwAA+18AgO+PALAKjwAwYS8AAPEKAAD7AQAA78wIEP/vCADUnwBAbvUAcCzyAED/fgAA+V8AAGr4AgCb"
    "1AsA4v8GIP8vAICOjgBwJV8AAMANAAD4AQAQfwAAQJ+IAiD//w0As68AAPrqBgB/sAgwL4AIQAyQCGAfwAgwr/gEAMWeAAD3WQAA"
    "/v4AEI9kBEAfYAUwC3AFMAvRAhCN3QAA9hsAACCdAABw/wAAsH8AAPAvAAD3DgAA/Q4AAPgPAAAwjQAAs/8BEO/6AlAMyAAAEZ0A"
    "APvfAgDrzwUA8AkAAPAFAABAHwAA0BgAAMYAAACoAAAAzasAQP+4ChD3NAwAcP8IAOhvAEDPvgBAGH4AAOBfAACw/wIAAPEHALTo"
    "BwD7rwAA+n8AYJ/OADAFjQAAoA0AAPIEAACMAAAA34sDAPz/BQAAugAAAN8AAHCfAADQPwAA+g8AAP9PADBsbwAAANoHANO/AADO"
    "/gEABvcAAAC8AADY7wRQ/84EAPMDAADYAAAA0g0AAPkGAAD+AgRQr9EPcP//BAD4jwAA4AoAAPELAACzAAAAvAAAEB4AACAPAABA"
    "//8CEI+ECxC/pwwApfwHAPzfAUCf/AIAAvsAAMBPAACA3wEAAPYGAGT2BgD8nwAAwC8AANCPAADgnwAA0G8AAPc/ABD/HwAA+C8A"
    "AJB/ACDqGwBwj08AEGEfAADwCQAA8Z8BABD2CCBI9gcg/Z8AAKLfADCP8gGADfIGYM//BwBCyAEAED8AAJAKAADxAwAA4QcAAPYf"
    "AAD3DwAA9g8AAPYPAAD0HwAA9G8AAPGPAAD2PwAwz48AAARuAAAgbwIA5P8IAP8HAAD2AAAAlwAAALAvAAD3KAAAfwAAAE8TABD/"
    "/wQAzmQMAPqlDwCyzwgAo8wCEM3WCICP6AFQ/j8AAPwvADAvrwBAj8wAAPk/AACQCwAA8ggAAPsxCGBP4AzAT/sFkP+/AAC2fwAA"
    "oE8AEPwKAHB7HgAgMg4AAOMGAAD8bwAAAvUGEEvUCCD+3wEA8wsAAPBvAADQfwAAsK8AAMBvAADzLwAA9Q8AANMPAADyDAAA+QUC"
    "IK+wH6BP9gpg//8BANZPAADwDQAA9gUAAOMHAAD+ngBA//sDUG9ACIAIQAhQC2AGAK31BQDCjgAAtc8AAM80AEBvAwBA/58AAADz"
    "BgAAsAYAEPgBAPYdAADWrwBAXfQAABCKAADAPwAAMPcBAACQCABoswcA5L8BANEHAADnAgAAXQAAAD8AADCvzAMwv5UMEL3UCwDB"
    "vwIAs98CIL/oB4AO0gIw/f8BAABeAABwDgAA8QQAAPIBAAChDgAA6DsAAC8CADANAABADaYDMN+sDAD6VA4AkO8JAPiPABD/LwAg"
    "/woAIP8MAGD/DQAQ/wsAAP8KAAD3DwAA+B8AEKxfAAAwbwAAYC8AQOzPBcD/zgUA1gAAAIsAACDc/wGA73sAgH8AAHD/GwAAYp8A"
    "AAD5AABxvwAQ/x0AAKAOAADxCgAA+gEAQI8wBaAP8grA798BIOs/AACALwAAcAwAAOMGAACLAAFAP6EKgM/eAyCsXwAAYA8AAGAN"
    "AADS3wAA/v4AAAX6AAAA3QAA5/8HAP6uAwDzBQAA9AAAAMcsAFBvmgCwBGsAMCAvAADRBgAAuwEAEH9EAgDL7QsA178AMF/kAoAb"
    "9AIw7I8AAPgfABBfywAwX/cBAOX/AjD/HQCgnU8AEAFvAACgHwAA+gMAMH8AAFDffAIg3f0PMP0JAKDfLwDwRB8AAFAvAADhDQAA"
    "+gUAQN+oGSD/zhkAt+wCgJ80AKBfAAAw/E4AACD9AgAA8AkAQvgJAPqNAACR/wMAvvgIAATwBgAA9wMAxv8JEO9fAACCDwAAwAcA"
    "AFD9CAD4dg4gH7EKQP//BgBE9QEAAIkAACAfAABgCgBA+v8OsO9YAmCPAAAA+gEAAPIFAADQCgBQ6goAMP8DAADxBwAA9gMAEK8Q"
    "A1A/wQ+wj/4DYP9fAADhCwAA8gwAALROAFBNeQBwqi0AEPkvAAB4yQAADOEFAGtwCADy/wQAw+8DEF+ADGC/0gcg+U8AAON/AABZ"
    "9gAAq/cCAMPfAABgLwAA8g8AAP8jA3B/8wtw7/4FEMevAABwTwAAoA8AACD5CgD3eAwQP7AMgJ79CBB30wQAANUAAACaAAAATgAA"
    "tRQAAP+/ACCfwgRgDWAGMA1QCTAPYAgAzfgHANSsAADR7wQgi7QHYD/TAgDpTgAA9woAAKwfAACrTwAA4R8AAJDPARDL9QRgDtAH"
    "UM/8BACDjgAAIB8AAJAKAACgCQAQ+Z8AYBzyAAAB6AAAoD8AAHBfAAAA1AIgR+QDAPmvAAD5BQAw/08AoA7pAIAMwAWACKAIUA7A"
    "CAB//AQA+X8AAAD9BgCz/wVQ//8EQJr/BAAA/QQAAPwEACD/BwAQ7AUA5wUAUP8LACAuDgAAUA8AAIAPAACwDAAA+44KAMfMLwDI"
    "7AMAu/oCAADZAADg3wAAgPgEAAPwBBCf+QIQ6z8AACAdAACQLwAA9I8AAJxuAFAOfQGQz/8EIJivAQAQLQAA3MwMAN+8CwDfKwAw"
    "738AAAC7AAAAuAAQvp8AAOoMAACxDgAA+QwAEH8AAHBfRQBw//8FAN/UBwD5/gQAsZ4AAMJ4JgD5/18AvaAOADvyBAAAmwAAgE8A"
    "APAMAAD0AgAAYZgDAP28BwC9kAcA9f8AAOH/AACb8AEAqdoAALMpAADnjQAQ3+4AAN39AwDk/QQAAMAEAADgBHCf+gIQ2I8AANQc"
    "ACDv3wBgT/YFgB/ACIAMwAhQDdEIEK/8AwD2TQAAgX8AAPPPABD/zwAw/M8AAICvAACw7wAAsP8BAFB9AADXAwAA/wsAAF4/AAAm"
    "XgAAAIwAAGBPBAD3/z8A9pYZAPoKAIDvLwAwjz8AALB/AAAw+gIACuAIEG/YCBD/rQEAsAQAAPE0AACaTwAgXi8AgH2/AqD/7wEA"
    "sA0AALAHABCI2Qgg/+8JMC8AAFD/HwBQil8AAAB9AADPLwAA+wkAALJNAAD8/QAAnzEAQG+eAXD//wYQ7/QIAPz9AgCifwAAgZh8"
    "APjcXwBrgAsAP/EDAAGaAAAwHQAA0AcAALEBAAC1eAAwv/kEAD73AAD1PwAA+h4AQA15ADBbfQAApgYAAPULAADcvQAAjfYAAOf/"
    "BABw6AcABIAMEL/YCwC17AMAwxsAEO6PADAv9QFAD+AGQA+wCDAvoAgA+v0DAPFuAABQ3wEA4v8EAPj/BGD//wEwp/8EALD/AQDA"
    "/wEAYM4BALkCAIDvDACQWg8AUEofAABQDwAA0ikBAPrvDwCXyQQA0x0AAPp/AAA1rwAAAP8BIAf0CFAN4AkAvvkIAMONAABADAAA"
    "wI8AAPSPABCPfgBgj+4EoP/fAQAgTwAAQC0AAIbrDhD/zQcAfwEAQP8fABBlnQAABpwAAKxPAADqCAAAsW4AAPROAAD8AgAg/1wA"
    "cP//AzBf8A0A+/4KAMCdAQCiyq8A+YxvAJ1AHBA/0QIABXkAADAdAADABwAA4AIAALFeABDv1gGQLvAEUA32ARD/zwAA5dMEAPP3"
    "AQCwjwAA4zoAAOr9AQBM9AQA9v8IAIHoCAACkAsAr8gMAMfuBgDkCQAA/a8AQE/1BoAO8QVgD9AEQB/3ASDvfwAA1AkAAOUbAACv"
    "3gAALvgGAHz6CAD1/wgQE7IJEG/ECwD2zgMQ3owFQL/8B4D/HQAweX8AAACYAAACxgAAj7wAAOxMABDI/wdwz8wFQD0AAED/DQAg"
    "aG8AAAfJAAC/zQAA1VwAAJG+AQD62QUwfwAAUP+vAHC/+gUgX8AIAPr9BQCQfAAAq+wLAP//BxD/zwAQJfsAAAHyADAM8wBgj70A"
    "AOkpAAD6BgAg738AQI/1AVAMwAiACcAIUAzxA0BN3AAA+U0AAPkbAFCvnwBgHvkAEG/7AgD3/wcAMLEJMJ7pDAD83wMA9D0AEN//"
    "AWAP9AQw7+8AAPS/AADL+AUAr/wDAPd9ABDHPQBwbe8AYAr9ABDd/wEAQMEIAADACADc5QgAxb8BAMUZAACfnwAgHsoAAOm/AADz"
    "nwAArNMBAIv1AwCkOAAAUA4AANDOAADX1gAgP7oAYN//BSCYvwIAMA8AAHAMAAAQfAAAkP8BEPfvAED//wAAMP8AACD/AwBg/wAA"
    "MN8AAIHbPwD3ql8QPZAOMA/yBFAIugAAIE8AAIAOAADQBwAAxvxvIP/+PzBv9gZwT74AEII/AADxCQAA9gQAAPgDAAD2LgBQv84A"
    "UDtfAADgfwAAgPoDEATAB3Bf9gUQ+M8BAIO5HgD5/w0AXwgAQP9vACApqQAAAIgAAMhdAADVGgAAUI8AAPSPACD/jwBAyF8AAGC/"
    "AABgzwAAYP8BAEC/AgDyGgAgzZ4AYB/hAoAPoAWALoAIYA6ACBDO+AYA048BAPIIAADnjwBwP/MAYB+QCEAMgAgAPMAHANn9AQCR"
    "XAAA+wQAUP8PAAC+LwAAQF8AAEBvAABwrwMA+/9vAPtabQD8AwBgzw4AcBUvAAAAewAAID8AAIAeAAD8jAUAif0HAMLMKQD53F8A"
    "jIAKED/zAhADfAAAQA0AANAJAADzAwAAk34AML/4AkBf8gcA9P0HAGD/AQDy+AcA9PQHAKCvAADXAgCwzw0AwAdPAEAEjgAAAH4A"
    "AEA/AAD8zwkAyagOAPQsACB/qwBAD/ABYAqgCIAIYAhQDLAIIH/4AgD2jwAApwAAAPkAAAD2BQAA+QkAAGAeAAAgTwAAQc4UAPf/"
    "XwD3BgBAnz4AIA5tAAACqwAAAG0AAFB/AAD5/w8A9kcWALAcAAD4SQAAQwAAECAoAFD/7wIgn9MHAOv3CQChrgIAo30AEN7vAABf"
    "ngAAoF8AAHD+A0AF8gSgr/gDAMWOAADjDQAgny8AQDwPACD5rwEAsPgGAAbACACu9QcA078BAKD83wD2Rp4AajAuEB7ABgAD1QAA"
    "ED0AAGANAADgBgAA1C4AAK+rADAvbAAAg38AAED5AgA60AYAX/cDANeNAADlCQAQ3w8AIK0OAAD0fwAAQvUEAADgBwCL+AQA2K8A"
    "AFAIAADxWgAAuaoAIC9uAIBd3gSw/+8DADAPAABwCgAAwB8AAPQdABD+AgBA/3oAcP/8BjDf8AwA+/0MAJHNBADyPQAA/EkAMJ8A"
    "ADDvXACA//8AUP/2CRDt/QMAw64AAMJvAAD1TAAA7wAAIO+IAED//QhAv8EMAPvsDwCBzAYAQAkAAMALAADUTwAAbE4AQJ/fA0DM"
    "7wYAAE8AACA/AAD6XQBwXc4AkArtAEDf/wMAYsMIAADACABs9QQA2Y8AACD/AwCA/wQA+e8AcP/PAACAzwAAcM8AAED/BwAA/QcA"
    "xP8rAN+4GCDfjwBg3/0CcCvyBgAA9QIAaa0AAOcdAADjGgAgzu8BYA3jCFAMsAhADsAHEE7zAwDIzAAA8joAAOd6AFDv7wBwC+kB"
    "QH77BQD5zwgAEIEJAL76CQDZnQAA2f4NAN/MBUAPAACA/xsAEIfPAAAA2QAAjKwAAPo9AADaAgAA/AoAAOcPAAAgHwAAIB8AAIQP"
    "AAD/3wsA6LgeAHG2AQC9/wcAbfsEAPN/AAD0fgAQPtEAICzDAAChGAAA7QMAQP8LAHBMDwAwRg8AAJAMAADhBwAQ/qoCAMvuBgD0"
    "HAAAvN0BMAzgBoAMsAiADIAIYA2wB0B/+gIA1ywAAPMJAED/fwCAP8cAYD/QA4AKwAgQL5ALAO36DACj7wMAUJ8AANFvAAD9TwBQ"
    "/18AAKB/AACQjwAAkN8AAFCeAACx3F4A96tvAHogLxAfwAggC+QBABBOAACADgAA8AcAAJBOAAD2TAAQvwAAIH8DAEDvrwAw//oG"
    "APzXCQCx/wkA1wsAYL8PADBYDwAA828AAHD4BWAIsAkAb+YGAPavAAC7AgAw/wgAYIwIAABlDAAAsAkAAPA2BQD9/QkQzMwBAGBv"
    "AADQrwAA+W8AMP9PAFD/bwAAkK8AAID/AABAvQIA9qgsAOrKHwCp0QcARMgBACBfAACwCAAA8wAAAOcAAAAAZwAAYG8AAPHlAwCM"
    "9ABQn/oEEMvuBAAAiAAAAHsAAJAuAADyDAAA+gcAAP+PAEDv+AMQb7ALAPrHDwCR/woA9gsAYN8PACDXCQAA818AADD7AgAA8AcA"
    "v/oHAPWfAAAAjAAAMP8AANG/ADD/jwAAc48AAECPAABA7wAAAP4FAKkCAID/CgBwRy8AAIBfAACg7wIAAOIHAKu0DADo/wYApD0A"
    "QN+PAFAPvgAw//8BAJXoCAAAwAgA+eoHAMS+AgBw/wcA4P8EIP3PAHD/zwAAoI8AALDfAACg/wIAkM8CAGTrBkD//AdgL/EDUA/l"
    "AAACqwAAIE8AAIAPAABwDAAAYI4AAPiMADDvAwBg/78BgN/kBSCfgAwA+tYJAID+CQBkWwAgfvIAQAigAgCO2AEAr38AEAqhBAAs"
    "YAgApnsBAFAJAADiLgAA5ssAMD+rAIALrQKg//8DAKQPAACACQAg/QQAwMwPAFByDgAA838AAMT8AwAA8Acwj/kGEMueAABwzwAA"
    "988AMP+PAHD/jwAAsM8AAHD/AABg/wUAYP8CAHAGAADxfwAA2G8AMD98AUCe/whAzK8CAFAPAABADgAAswYAAOovADAfuwBADPIC"
    "cAzACEAO8Qgg7/8BANVeACDP7Acwn4gEIK8EAEDfTwAAA6wAYAO5ALCbPwAw/AcAAOYKAGDvDwBQug8AAJDPAAAA8wdABvMIUJ/f"
    "AQD5CAAAYB4AAPEKAADtAQAgzzoAUP/+ATDP8AgA+/kIALC/AQDGCwAg774AgB/4ADBf+wUA++8IACRjDCDf6gwAyN0FALDPAQD1"
    "+gQgr4ABUJ8BAID/CQAgr28AAPt/AACBDQAAQO4EAPH/AiD9/wCA//8AIIf/AQBA/wAAQP8CAED/BADS/88A+Zh/AKpgHhBf8QQA"
    "BNkAAEAfAADgCgAA8wQAEIj7CkD/ywZATwAAEP8IAACkbwAAAMwAYJ+tABD9TQAAIE8AAKBvAAD0/AAgjekAkP//BiBU/gAAAL8A"
    "AACNAAAgDgAAoAkAAPG4AAB8jABQz+8FgJ3fAwAATwAAAG8AAFK1XwD83j8QnmALAF/RBAABtwAAICwAAKAKAADwBQAQ2wIAgP8G"
    "AKBpDgAwSgoAALAHAADyAwAg/b0CEMz8CwCjPgCAv9oAcA7xAiCf/wEA/P8CAKyACADJdAwAsv8JEMsBAIDPCQBweAwAEEEOAABQ"
    "CwAAsAkAEP7/CgC9yAgAMN8BAPL/AgCt9QAAJosAAGAuADD4CADz/48AQVRtAAD7/wlA75gDQAwAAGD/AwAwuwwAACAPACCcDwAA"
    "+wgAAIKILAD87h8AnsAGACq4AAAgPgAAkAgAAOAEAADzAAAAoz4AQN+/AIAd/QJg7+4GAHWxCBAYgAggv+gHAMWeAQCD2w4g/d0N"
    "EA8AADC/GgAw764AADi5AAD3vgAAwi0AAAA9AACwTQAA5vQBID7mAGC/zAAg5+8AAACMAAAAPwAApkkAAK7/AUAf+QAw/48AAOxf"
    "AAAcyQAAb54AAMgWAAD1fwAgv/8IIF/0CBD8rwAA918AAJ+uAADOjwAA5RwAAFALAACgDQAA8G8AAMlfACBPfwCQ7/8DMLiPAQBQ"
    "DQAAoq8AAJ72DwBv5QsA5f4GAADxAwAT9AMg39sBAMNNAADCTgAAz9sAQE/hBkAMgAhgCVAIMBzACADI+QMAoD0AANWNAAC//QYQ"
    "X+IJAPn/AAD67gBQT/AGYH72BAD3rwAA1W8AIJ/fAEAO+gJAv/8BAKfTCAADwAUAvfQEAOe/AQC4qAAwj/wEMAzzAgCrrwAA9G8A"
    "AJf0AAC89QAAozkAAPYtABCv6wAgP/EEQAzhBEAK8ANADPADEJ37AgDEXgAA5wIAAPIGAADyCQAA8gwAAPJfAAAw3QAAxv5cAPX/"
    "/wDSCwAA65sAAH/GAABYyQAAEH4AAHAPAADBTBQA8f9/AJFfAAC+tQBAH+QAABadAAAA2gEAAIAKAJxEDwCh/xsA4QMAAOgwABBP"
    "ygBwLl8A0L7/CYD/TgAA8AkAAPIFAADp3wIAjWIEAC+JADD/6wRQb8ACUAfTAAB1bQAA+gkAAOFPAAD5WgAQrwAAMM8FAED/jwAQ"
    "f/QEANv0CQDB/wkA+S8AAJ1PAABi/wwA/o4HAOMJAADzAwAA+gAAALwAAABQ3wIAwLcGAJD8AQCBTwAwjw0AcAx6AAC8igAAYK0A"
    "ALOPADCu9QKACvMEgBn6BxD/mQcAAFAIAGTVBwDzjwEAkG4AANrUAiAOoAZACWAIUAiAByAbkAUAttQDALHPAADWAAAA+AIAAPYD"
    "AADzBgAAoAoAADAPAACnzhUA9v/PAPUuABDtjwCQP18AoD0/ADCzDQAA0AoAAPL/CgD2zgkAo28AQJ/0AoAOqQAQdC8AACB/AAAA"
    "4QEAjLEHAIb/BQDzBAAA3FIAIG/6AZA/vwfA/78FMPkDAADyAwAA5gAAAN3NBBBflQRADRIAUL7fAlBvkAgAA6AIMF73ARDpTwAA"
    "sG8AAPoKAAA/AABQDgMAIP/NASA/gAcAiKAHALH8BAC1/wUwv/oEAATqAAD3/wwA+U4BAOEHAAD0BAAA+AAAAJBvAAD09gAAuLkA"
    "APguAAD7DQBgLpwAUL/VBACD/QkAwe8CAL3zBUAO8AZgjP0FAMmkCAADsAUA7/UEAMO/AQD1TAAgj/sEgAn2BIAIogiAB9AFIA7w"
    "AgCOqwAA1A4AAOgBAAD3AwAA9gYAAPYJAADyDgAAgD8AAMz/TAD3/1wA0x8AQO+vANAtnQDgCp8AECFPAACQHwAA8v9vAPKvTACy"
    "HAAgnokAoAxtAGAlLQAAoAkAABCaAQB2wAYAwf8FALAIAADyBQAArKQAYC+PAKBMfwag/+8GMPgJAADgCwAQ7f8HQD9DAUBdWABg"
    "z+gCAATABAAA4QIgPJsAEPsdAADyPwAA/TgAUG8AAIBfJACA/+8CQH/RCADLsQ0Awf8KAPT/DADE6w0AAPAJAIL6CQDX7wUAMF8A"
    "AKAPAADzCQAA0m4AANr1AACZ5AAA9F8AAPUeAABumAAAfbEFALP/DADIHQBQLNYAsAXGAHBK/QAQy8cEAABACQBaMA0Axt8KAPRO"
    "ABCO2gFQDfADYAzQA3AM4AMQD+ADALrsAACxPAAAor8BAN36CEAe6AFAz48AAHZeABACXACAb00AALU/AAD9/w1An1gEkH8oALD/"
    "/gEQA/QEAADoAACLbwAQ/woAAIncATCPRQBgKSYAYO/ZBCAHcAgAAHAKAFjmAwDqXwAA0o8AAPsmACCPAABQnwEAUP8tABBv6AAA"
    "q/EFAPP/AwDI/wQAb1oAQCxoAIDu2AUwB4AIAADAAgAlxQAA9y8AALJdABCe6ABgHfICcAfABXAJMAkgDEALAGzkBwDTnwAAo+8E"
    "IH75CHA8/gAg/v0AAADwABAD4ABQj/IAALT/AABgvwIA1tQFALfQAwDyfQAwzS8AgB+JAADn+AEAUPwCAKKuABCf+QFwCckAcDf/"
    "ACD/9wEAIZAEANWECQCh/wYAkJ8AAPP1AADHxwAA8V8AAPIeADCPuQAA3MQIAID+DgCQCwAA5SMAAC/hA1ANjQGAPe8GYP89AACQ"
    "CwAAsAcAAOUBAAD5BAAA/AQAAPwIAAD5CwAAgC8AAIPfiwD1/68ApP8EAO35AwAS9QAAQ+0CUP//CEDJHgAA9QoAAPYEAADz/wYA"
    "4/cDAADkAACS/w4A924CAIAIAADyAgAAxQAAAKGvABC9yAAgCW0AAAAfAAAArgEAAJEKAH0gDwCy/wwA28wDUE50AnAaFACA7/wC"
    "IAfABAAA8QMQOMoAEPwsAADyBQAA9AoAAPUHAAD4CQAA/y4AAIeuAAD8/p4Aov06APEbAADJyAAQH/YCIAyxBlAKsAQgDaADAC3T"
    "AwDR/wEA9U8AMN/NAHAe8AXACbEKoApwDWAPgAwQfvYLAPXvAwCzHQBgv20A8QhLAEAEDwAAUAsAAIAJAADASQUA4c1fAOIIADCu"
    "HwCwKA8AkBgNABBjCgAAkAcAAOBJNwDh/40A6a8AAGrcAAAA3QUg/P8OIPwHAQDzAAAA6AAAALkAAABgTgAA1MIAAGjAAADC5gAA"
    "wZ8AAL22AAC5cggAUPoNANceAHCffQBQP4gAAAFcAAAQDgAAoAYAAPJFBAD2328AcJ0BAPf4BRAvoAhADMAHUAngA0AOsAAQj7gA"
    "ALJeAADKAAAA+AEAAPkBAAD8BQAA/QoAAKEPAADHz0wA9/+/ANMHADCPDgCgGA4AgFsNAABQDAAAgAgAAMF6JQDizn4Aw28AAP1M"
    "ADCfAABgXQQAgD4vAEBPfQAAu+sAAMP/AACRbwBArqsAwAptAGBHXwAAAMcBAACACgDYAz4AgP89AMTvByBvcAwAB9MDABBvAAAA"
    "yQAAAtAFMH/BBADD/wIAg/wvAOzaDwAR4gYAgv0IAPmvBQCBHAAA4AgAAPIFAABgzwFA/PwD8G/0A0AVzwAAcK8BACP0BwD8uA4A"
    "gf8LAHCtAADa1QBwDIgAYDYfAAAgnQAAALAHAJUhDACQ/wkAwAoAAPQFAAB/4gFgL/kLkJ7/BlD/HwAAsg0AAMANAACgbwAA6wUA"
    "MC8AAIAKAABg7zsAIA7XAACa8QIAgP8BAJBvAAD4XAAgnwAAYG8CAID/fwAgf/cEANnjCQCA/wcAgK8AANgWABAvAABACwAAQM+c"
    "AhAfkAoAmtQDALBfAADzBgAQ3gQAQF9/AICPnwWg7/8JMPsrAAD0CAAA9QQAAIH+BRCO4QhwDPcIQM6cCAAxkAgAANAGAKz0AACC"
    "fwAA8wUAAPUKAAD2BwAg/AkAgP8OAAA2bwAAhvysANL/vxDJvQAwTzMAUHwGAFDvfQAQCMIAAADiAAAmagAA+x0AAPAGAAD7vwBA"
    "v+0AcBzTAEAK8AAgDvEBAHnpAACxPwAAtm0AcG7XAKAHpwBAza8AAEHAAAAAsAEAKMAAAObPAAD53wIgLzMAcAlBAIB87Qdgj1AI"
    "EAOQBgBD8QAA93wAAPcNAJD/XwDAX28AACedAAAQfwAAYE8AAPHPfwD1zrwAYK4AAPPXAgD04wEAsJ8AAOVvADBP0QQgvlUMAGD6"
    "DwD5DQBQfi0AwBoNAEBnCwAAoAYAAPEAAAC5YAUA+/8/ALIvAABsmwBAC/cAUAbxBlAEoAcACqAFAC3GAAD0HAAAwT4AEL3ZAHAL"
    "8QSABvIAQAzwAAAf8QAAp9cAANF/AADVAgAA9AcAAPQEAAD0BgAA+QoAALIfAADa/58Aw/8rAObfAACZ+QAAAJ4AAKL/DAD9fAMA"
    "4wYAAPYCAADaAAAAYI0AAPdIADAvAABgTAAAQN89ACAv5QAAqfIAAIDPAABxPABAz6wA4AmLAHAFTwAAIH4AAADSCQClBF4Akf+P"
    "APoCAHD/BgDAzQkAgNkHAADwBQAA9gEAAO9UOAD4/58A9gQAAPQJAAD3DAAA/Q8AAP0vAAAhjwAAlv59APX/PwDU/gMAtvoBAADn"
    "AAD5/wwA338CAIAMAADiBgAA2AEAAPIGAADqUAAAnfkDYG8/AJDNzwiQ/34CEPcHAADyBwAA0o8AEP16AFCfAABwfwAAkP8dAFBv"
    "ngAAzf4AAMO/AABgfQAA2vYAAIzEAAAQPwAAoC8AABD1AgCuUgsAcv0IAPIDAAD0BAAA9AUAAP4GAAD3BwAAogkAAP+fXwDz/xcA"
    "YG8AENu4AJANqQCAOT8AAFA+AAAD1QIAyaUHAGD8BQC1bQBAj/cDgAf0AUAb+gQg//gEAADQBhCfwAUAtP8CAPQEAADzCQAA8gsA"
    "APANAADyLwAAUK8AAMT+3QDS/48A9M8AAJasAAAAmgAAQq8EIP//BwDYCQAA8QQAANYAAACwbwAA+SsAML8AAGDPBABw378AEI/z"
    "BQDp9QoAkP8KAHCNAADy+AAAxLgAAPI/AAD1LwAgf7kAAMnhBgBg/wwA4QkAANhzARBv9QNwDb4DwF3/CdD/bwAAww4AAPAKAACz"
    "jwBAju0AgDtvABCRDgAAAK0AAADRBwCJYgsApP4KAPWOAAD0fwAA/o8AAP6PAAD7XwAA+o8AAPvvAwD2/wMA8AgAAPXSBQCd8gJA"
    "HsoCoI7/CqD/XwAAwggAAPAFAADUjgAwPvEDcAngBoAE8ASABvAAMAvhAABMtgAA9R4AAMjOAwBcMAAALxQAQO/8BAAEgAgQALAF"
    "YB7yAQDoTwAAko0AEL7oAJAObgAAQg8AAGDMAgAAkAkA3qQLAKP+BQDQTwAA+0kAEO8AAFB/AABQ/04AIJ/3BQDbxA0A0f8KALJN"
    "ABB9+ABgC9UAkCfuADD++AEAALAFAHugBwCk/wMAsK8AAPl6ADCPAACQ3wQAoI9/AEA/9wIA3fgFALH/AQDQDAAA4B8AAPEfAAD0"
    "PwAA9Z8AAAD8AQCx+SsAsP//ANTvAACt+wAAALkAAGH+CAD7jwUAsgoAAOEGAAD1AgAAyv0CQG9EAFAKAABQ/58AIDvDAAAA0gAA"
    "FKkAAP8dAADACgAA9JMDAH72AjAvqgCgGc8K4Ou/AZD/CQAA4AgAAKAMAAD0NQMAf9ALcB73CJBd3wGw/x8AAJQPAACwDwAA+g8A"
    "QI4fAABBDwIAs/8NAPx7AgD2AAAA9wAAALwAAAD2CQCQ7x8A4DxPAJA7PwAAkg8AANALAAD0nDoA+P/vAHDcAQC4oQgALLEHAKqO"
    "ABD3CQBwfz4AANflAABg7wIA+k8AkL+OANAIbgAAEE8AAIANAADhBwAA/MkGEP7/DgDRBwAQnx8AkAsPACA6DgAAIAsAAFALAACQ"
    "SiQA8f/9AKr+DgCOBAAAD7YFMO+qCTBekAgAANYAAJM9AADYAQAAlf0GAMz3BQAA9gMAw/8OAPdfAQCgCgAA8gUAAOYAAADUbABA"
    "X/oAQB/7ABD6/QIAQPADAADABABmkAgAxf8HMMz+A0BPRABQDCAAUM//BVBsgAgAAKAHEAnnASD/PgAA8wIAAMxxACBP2QCAax8C"
    "wMrOC7D/fgEQ9wAAAPUBAAAw3gMAwIkIAMC4BgBwvgEQyF8AYA7EAADH8QIAMP0CADCsAADh9gAA8KYAAOAvAADjPwAQT5kAANR0"
    "CAAwui8A8wYAANlhCTA/9gVwH54FoJ3/B3D/SwAA8wUAAPQDAADljgIwP9AIUAzyCCCf7ggAMcAFAADABGAv4AEQ55wAAOROAACv"
    "2gBQD/IGQA3gCGAJwAcwHsAFAJz2AgDjbgAAIN0AAMD6AADXuAAA9U8AAPNPACCe1wEQi5MIAFD6DwDTTgAAzf4AED/+BBCe/wYA"
    "grQJACLACgDutAkAhPsJAED8BADjpAgAxOUCAPQ+ABD8DQBgHWwAANrlAQBA+ggA908AAP75AhDPkQhAD3AKcA2gC3AM8gYwz+4B"
    "APpOAACliAAA8P8CAPffAAD6TwAA+Q8AAPoPAAD4DwAAsgkAIPsvAMD/TwAgI08AAKAOAAD0BQAAzLMJAP//BgD+XAAAw+8AMP/v"
    "ADAcjwAAkI8AAKD/CAAg1QgAsvsFAPOfAAAAfwAAoG8AAPhOAGAvLwGQ//8LUMqPAQAQDwAAEA8AANb/CwC6iAUgDQAAQHtYAHDv"
    "6gIQF8IDAIVuAADIBQAA0AMAANgBAABcAAAQDQAAEGybAxD/jAsA2WIvALDvBwCk/wcw3/sCEAOaAACF/g0A/84IAMMHAADwBAAA"
    "4wEAALQvACCfmABAD/UDALufAAD0HwAAncYBAD+QBQDVzQUAMP0LAPSLPyCf1j9A//8LAIf2AgAA5gAAAJ4AADBPAACHbAAQvvwA"
    "MA+gBUAJgASACNAAcAm5ACCuXgAA+QYAAPddAAD9XwAQ/z8AEP4PABD/HwAA/k8AAPZ/AADkbQAA9h8AQN9PAKArLwAQoQ4AAOEG"
    "AADmwQkA+/4JAPhcAADkXwBA/48AwAyPACBR3wEAEPsLAACwDADS/AcA848AABBfAADADwAA9z8AUI+PA7DP/wyw/38CECQPAAAg"
    "DgAQyr8AgN9JAFAfAACACgAAIP4HAABBfQAAYLsAAPkuAADBAgAA1gAAAIsAABAfAAAgL94EIP9aDgDZlA4AoM0DALL/TwC1iB8A"
    "AOAGAKL9DQD8nwIAUg4AALAJAADwBgAAxX8AUE75BUBtbgIQ/gIAMM8JAFAMegAwT/IAAOV+AAAQ9wsAsDgNAGrCCxDP/wcg78cC"
    "AACzAAAAlwAAAGkAAPU+AAD9+QJAz6AGgJ+ACnBfwAtwDfUGAM/fAQD2LAAA9E8AAPhPAAD8DQAg/woAMP8IACD/DAAA+U8AAMO+"
    "AAD4HACAjWwAQAJoAAAQLQAAkAcAANVABADK+QsA+XkBANaPAFD/zgCQLI8AAJAMAADw3wMAMPkLAIH+CAD3bgAAAPYCAFD/AgD0"
    "/ABAb9cAsP//CZDN7QMAAIkAAACIABD9vwGA/70BsB0AAKAtAAAg/gYAAIBvAACWnwAA/T8AAKEAAADHAAAAfAAAAD4AAACfrAIA"
    "34gLAK2UDwCjnwIAQPvPAPKcywAhAF4AcOwPAPP/AgAQiwAAIB8AAFAKAADTTgAAj7cAAA+wAwBq7gEA9R4AAKzIAAA+kAgA5M8E"
    "ABDnDgDzFw4gr+UIQP/8BQA18QAAAMQAAACnAAAAxwAAwzgAAPfdAQCNkAQAL2AGQAygAzAM0AIATKwAAPUtAAAA6AoAkJcMAInA"
    "CUCP/AJQ//oAAAS1AAAAmAAAAKoAAPL/CwD4OwAAnQAAUD+5A6D//wtgr/cFAEOPAAD0BwAA/f8IIN9IAXAfAACwzwUAUP8/AABg"
    "LwAA8wkAAOsAAAD0BAAA+QIAAK8AAGA/AACgv98EcP/rDiC/9QwA8+8DAM9rAkD/zApwHgAAoDwBAID/LgAQiI8AALEvAAD9BgAA"
    "9SwAAO2/AGAf8gRgDpAIgArQCEAN4QgA7v8DAMWNAAAQ/A4A4/0NQP/9BDD//wMAd+4AAAC8AAAArQAAAM0AAOZNAEC/+gCQC7wA"
    "cIs/AAD9CgAA3ZwAAIzwAQD1vwAAAPgJAMEoCwC6sAhQ7/8DIKzkAAAAlgAAAGkAAABpAADEbwBAr/UEgA31BWB8PwAA/BwAAKu5"
    "AABs0AMA1o0AAEC/AADy3wAA3asAcD7OBoD//wgQmE8AADAPAAAwDgAA4P8LAPL/CgD0/wQA/M8AAPxvAAD+bwAA+y8AAPEfAABA"
    "/S8A8t1vAHcwTwBAhA4A/v8GAJvKAAAAPQAAQAoAADD5LwD0vR8AU2ANACDnCQD0/wMAicsAAABMAAAgHwAAkf8BAO3IBFAb0gEQ"
    "BGsAAADvAQAA0wYAQPoCAMBNAADI/wlA/50CsE4AAHCvAQAA/B0AAEBPAAClPwAA+QoAAKG/BwD1/wsA9v8GAPzPACD/bwAg/AwA"
    "APl/AADDLwAA0RwAAPnPAABu0ANgCqAGcA2QCDAf4wcA+/8BALBvAAD0TwAA+uwAIAuQBlAGQAVACXAEQAriAAD+jwAA1AoAAPZ/"
    "AIDf+gBgCfYAAACdAABgHwAA8TgFAPj7CQD1fwAA9j8AUN+PAIANjQAAMD8AALAMAADzlQgA+P8DAPUcAACx/wcA1/gFABDxBABy"
    "/Q8Q/88DEEgvAACQCwAA4QQAAMKvADCv9wSQCKsAML8eAAD6CQAAfk0AAHmmAADBXwAAw/8DIP/7BIAu+gFQNU8AALAMAADzJQMA"
    "8/wGAPCPAACQbwAA9f8AAP/0AyBewAhgDeEGEOr/AwDz7wEAkF0AAIO7AQDzzwAA8s8AAPB/AADxrwAA8W8AAPNfAADybwAA0a8A"
    "EP34A4A/9AAQA4wAAEAeAACwCAQA8dgJAOC/AADiAQAAyAAAAFwAACAOAAAACnYCQNzvDADNsg4A098BAOb/AlDf+wAAJ88AAHDf"
    "AQAA9goAAPAJALP4BgD3jwAQ178AsN//ADAonwAAgE8AAFD/BQAA4wsAg/4IAPd8AABh/AkA+toJABLgAgBg/A8A9e8HAGMPAABw"
    "CQAAsAIAANS/AJCf+gBQBLwAAFDPAQAQ+QgAAIAMAGH4CAD1nwEQ+58AMK/6AQASvgAA4H8AAND/BQAA8ggAhv0FAP9cAABgHwAA"
    "8/kDEH/1AJBP6wqQ//8JAEIvAABgDgAAcAoAAOIBAADLAQAQTwAAUA0AAHDM3wJAz2YLAJ5QDQCz7wEAoQAAAPQAAAC6AAAAnSMA"
    "AP3/BADdRgwAuZUvAMLPBgB5AAAAuQAAAE8AACAfAABQj54AUP+YCjAvcAsA588BABB7AACwXwAA+X8AUD9PAKCd7wgw/98GAAA/"
    "AAAALgAAEMceANFIDQD6+QsQ//8DAJvjAAAAlQAAAIcAAABoAACgjAEA9f8AAPqfACD/LQBA/wgAEP8HAAD5GwAAYGwAAPb/CgD9"
    "aQBgTwAAwE8CAID//wEAhvkEADH9AQD3PwAAkD0AAPj8AgCM8AQwDaAHgAnQByBP9wUA7v8BAMFOAAAA2AMAwLsFAIv4ACD//wAg"
    "v6cAAAB4AAAAigAAAHkAAPL/CAD3zwcwjwEAkE8kAFD//wIAZfgDABCuAADyHQAA+Z8AUO//ASAb+gAAEI8AAIAfAAD2hwcA+e8C"
    "APkdAADDSwBA3/wAkA7AAgC99wMA8H8AAPXqAgDbgAgAwv8HAORfAED/jwCgn08AENIOAADyBgAA91AHAPj9BgDybwAAxF0AAP7/"
    "BGAtsQhgC4AIQA+gCEBP+AMA/88AAPQ+AACzFwAA+u4AIK/BBCA/QAhQDGAIEAywCQCf/gEA9E8AAKC/AQDw/wIA0e8AAPHPAADg"
    "jwAA0F8AAOEfAACAHwAAcP4FAPf8CAAk8QQAw/wIAPz/BQBVbQAAIA4AAJAIAADRAQAA9wEAEG4AAAA/EAAQb/8FEO80DAB3kAwA"
    "sJ8CEMXvAoD//wNgKcwAAFCPAAAQ/QkAAOEKALH/BQD2XAAg/AwAcN8/AABTDwAA8wcAANsAAGAdAABgv7gFAP//AwD1zQQA++8A"
    "AP+PAED/PwAg/wgAAP8DAAD6BAAA+AMAAGD9nwD2vq8AMkBPAJL8DSD//wNAOaoAABAvAABwCQAAIC4AANFvAAD8vABQT28AwI//"
    "C2D/jwIAYg8AACAOAACAAwAA8ggAAPkBAACsAAAAfgAAAPr/HgD0QW8AUP4KAJabAND//wBAJW8AADBvAAAA9gYAAFAMAFD9CQDT"
    "fAEQ+88DEP3PACD/jwAA/y8AgP8OAHD/CQAQ/R0AAPgMAAD3DAAwjy4AACULAACxKAAA+P8EAEHCBgBCzQAA1RkAAAD1CgCA+wcA"
    "1voHMO/8BBCL4QIAANMAAACmAAAASQAAxYwBAPr/AAD7jwBA/08AMP8KAAD9PwAA/Q8AAKIMAABw/gYA+vwJADjyBwCB/Q4g/c8B"
    "YGw/AABQDQAAkAYAALMAAADZAAAATwAAIA8BAEDv3wIwv3MMAG2DDgDk7wcA5A4AUP9fAZAN/QIw318AAPcNAADafgAAuvoAANQ7"
    "AADACAAA9sMEEF/oAJAPrQKgz/8JYP+fAQDgBQAA8AAAAOYLADCfDwAwVwwAAOEoAADy/wQAALAIAED6AgD1TAAAQJsFAPX/BQD7"
    "nwBA/08AEP4JAED/BgAA+QgAAHAFAADhiAEA2vgBIE+6AHBv/g0w/58CALMJAADABAAAwAAAAKIfADD/3QBQz8EBcF1wBSAOcAoA"
    "LMAHAMn8BACgbwAA+t8AQP9MAIBPAABAvxYAAPjfAgAQ5wwAYP0KAPxuABD6jwCg388AEDOfAADQHgAA8s8DAFD7CwBy/gYA+10A"
    "AGALAADwCgAA9wIAAG8AADB/VQAg39kLANhXPwBQ2ywAALUeAKCNLwCblAxQ//8GAP/9AwAy8QAAAFUAAAAGAABQCwAA4QkAAOQB"
    "AACKAAAAjWQCAPvNDQDsVC8Agd8ZAMKMAQDy/wgA9e8DAPivADD/DQAg/gkAAPsJAACRBQAAkc8FAPj/DQAT4QoAo/0PIP//AzAo"
    "bQAAUA0AALAFAAD7/y9Q/64EUF8AABCvAAAA9ggAAJAOAABQPwAA+h0AAJANAADzxgAQjOUAYA58AOAmnwXw3f8E8f8sADDTBAAA"
    "oAbqAPdyHgCf8SxAr/scIP+fAADFCgAA0AUAAPADAACA/gcA9PwOABGwDABC5g9A//8FgHzOAABAPwAAsAcAAPdfAGDPzwAQB68A"
    "AKAPAADxBwAA2lEBAMz9AwD6PQAAgJ8BAOv8CABf5gIA7h8AEP0GAGCfDQAg/U8AAJEvAAD5jwBQ//4AQDnNAACAHwAA8gcAAOtB"
    "AwDv/wQA+V8AEPg/AGDPTwAQB08AAHAPAADgCQAA6kEFAM37AwD8PAAA6P8BYP84AOAeAACgTwAAMP8GAACBLwAA0g8AAPoEAAD0"
    "vwAAl/kAAADUAACR/woA/Y8CAHMNAADRBAAAtgAAABDYLgDSSU4AnZAeQO/+BhCr5wAAAIgAAABbAAAAOwAw+v8C4O85APAMAADA"
    "DgAAYD8AAAD5AwAA5A0AIP8IAABQCwYA82cfAJ3RB2Av9gDgCs4D4P/vA1DrLQAAcAkAAMSPAFC/+gSADdEEMN/fAwD5fwAAfvUG"
    "AMrXCgDTrQEA9AcAEM0vAnALywFAaD0AMP8BACDvBgAwrz4AAJI8AACwNQsA58IJIG/zBXCP/Q1w/38BAKQNAADABgAAwAAAABD5"
    "CQCx7RwQ3/Q/IP//DACH5AUAAOUAAACYAAAAbAAAwj8AAP/9ACA+wQNACIAIcAqQBRBd8wIA9/4AAKBOAADTXwAQ3/oAID+SAADc"
    "fgAA+gkAEE+5AQA/gAgAw88HADD8HwDzqQ8A3vcKIP//AiCcjQAAAF8AADAfAAAwHgAAtH8AIO/5AYAf9gVg3m8AEP8GAEC/HwAQ"
    "PJcAAORvAAC3nwAA/7QEMFsgCnAIMAhgCEAIUAiABRAs0QAA9T4AAOQLAADyPwAA4F8AAPA/AADxLwAA8g0AAPQLAAD1HgAg/wwA"
    "gIsPADBxDQAAoAgAAPAFAAD3AAAAvlYCEP//CRD9HAAQWR8AAJAFAACpAAAA+L8BAADCBwBC9gMA/lsAAMAMAAD1BAAQvgAAYD8C"
    "ANCMDADw/98EQOl/AACwDQAg/f8vgM9IAVDfAQAA+AgAAKAPAACQDwAA0wwAIP8GAADhCQAA/gMAEK8AAFDerwCAL+MFUE/ABgDa"
    "4gYAwr8BAPXvAQDb+QUAAPUCAAC5AADXzwEA584EAOADAACnAAAA0wgAQP8OALCbCgCA/gkAAPdfAAD00wkA9dQLAPGPAgC1PQAA"
    "358AQA/dABD7/wMAAMAHAABgDABGkgsA1v8GAPaPACCP+QOAH5AJkAyADKAMgAqADZAIII/2AwD4jwAAxD0AAOefAADAjwAAYG8A"
    "AJBvAADAPwAA0D8AAPC/ADDvBQDg7g8AgGEvAACQLwAA4QsAAPkCAUD/mA8w//8FEPwtAFBuzQAAMH8AAPIIAADBvwEAAPUHAAbk"
    "BwD/jwEAgF8AAPMdAAD8AgBQf0kA4N/vA4D+7wIAkD8AALAOABD4/wqA71gBkC8AACD/AgAA8wQAEMMEAFD+BAAQzQAAAPcAAAD/"
    "AAAwzxQAYP//BYB/8QhwD/AEIH/KAAD0PQAA918AEL++AAAAjAAAg84FAP6vBQCCDgAA8QgAAOgBAAAgXwAAQsoAMO+KAIAfSwAQ"
    "+A8AAGDPAQBA/gQAIL4AAFHcAADb/wEgDsoEUM3DAABlwAQAAPACAFTwAwBA3gAA0o8AAOq6CAAfAAkwDQAIQAwQCFAMoAAAj6cA"
    "AOQeAACxjwAA8I8AANCvAADwbwAA8m8AAPVfAAD1HwAA8j8AMP8GAFDuDwAAYA4AANALAAD1AwAQrgAAkI+oBUD/7wMg6xoAYIyv"
    "AAAAugAAgC4AAHD/AQAA0gggFcIHEPyvAADQCQAA9gIAAJwgAHAf9QHgSssD8v/fAjC0DgAA8AQAINz/BLDfRwHQDgAAEM8AAAD2"
    "AwAA0AcAMPUHADD9AAAAsF0AAPM9AAD6AgBA/30AQL/4AgCP8AYA6fQEAKG/AQD4vwAAhO0AAACNAADDjwIA9v8JAOAoAADzAQAA"
    "ywAAAICeAAD5/wBAX+gAgB5+ABDfDAAA/Q0AAKx/AACiXwAAom8AAPrvAACv/wIA/NwIAHGhC1AFgAwwr7IMAKP/CgDRXAAA+9QC"
    "IE+ABXAMgAhgDFAIMA+ABxCP9gMA0m8AAKK6AACa+QAADvYAAOv5AQAA0AMAAMADoFnwAQDi3wAArYgHQP//LwD6BQAA0AwAAGAP"
    "AACADwAQpgwAEP0FAAD2/wsQ74gHQF8AAHCPAAAQ+wgAAPALAADgCwAA+QUAANYAAADPAAAAbwAAMO9bAFDP+wZgn/IJAO34CAD0"
    "3wIQ/P8MkN+GBYD/AwAA5AsAAMAMAADADQAA8wsAANwCAACifwAA/vcCQD+wBEAOcAhwDGAHQB/ABBDO+gEA4V0AAEMKADCPPgCA"
    "B2oAMIu/AABx0wMAAGAJAGkBDwAw+z8Awo4AAN3PAFAvagAg3h4AALDfAQDx4wcA1vEEAMG/AADjnwAArfYHUD/iBgD6/wQAAMAF"
    "AADQBDAr9QAAxK8AAKKeACC+/ABAH/AAIM3XAACBzwAAQP4EANDnBADgrwAAMF8AAPELAAD6MgBQT/YBoE/5AsD/3wIQdE8AAEAP"
    "AACkSwAQ++8AQP/PAED/fwBA/48AQP9/ADD/zwAAxcwBAP0vAFBefwAAAnwAAJV/AAD4/woA8gMAANgAAAB/AAAA8/8BALn5AwAB"
    "8wMAAOkAAPT/BgDCfwEA0AgAAOQBABD7TQAQf+4BAAD2AQChbwAA9X4AAAH1A1Ab8QQA+q8BAPn/CkDvuAuwfwAAUP8GAADhDwAA"
    "gA8AANkOAAD8BwAA5VwAAP2fAAD7nwAA+38AAPovAAD9DwAA/g0AANePAAD2CQAA+98AAPr/BxCPsAhwHqAIgAzQBFCP2QAAxl0A"
    "ANJ/AQD3/woA/qoKID+ACFANkAhgDcADIG+pAADjHgAA/AwAMM8/ABBIPwAAcB8AAKAMAAD0AgAA+4gCAPzPATD/AgBw/wYAEPkG"
    "AAD2AQAAygAAMI8AAIDf/wVA/98DAPoFABDqDAAAkAsAALI9AAD7/wcA81QBANcAAABtAAAAkK0BAMn0BQBPwAQwn+MBAJKvAABA"
    "/gIAoOgDAKDPADD/HgAg3E8AAGA/AADxCgAA9gQAIK8AAEC/uAMw/88DAPeOABB/5QUAj6AHMG/ACFAvwAhAP/EEUK/OAAD4LwAA"
    "rgAAAN8AALD/AgAw+gUAAOAKAACgDgAA6b8GAPz/nxD8BQBw7wsAgK0MAADBDAAA4AkAAPRIAAD9/wkg35sDANA9AAD0CAAA+QEA"
    "AP0FACD/jgFA//YJAPj7CgDh3wEQ6C8AIJ2OAAAAnAAA0g0AAPNvABAB7ABQXfYBEMmdAAD/bQAAzN4AAACbAACxLwAA+M8BEEj5"
    "A1B++gEg/G4AAPqPAACF3QAAANkAACDNAADy/wcA0F0BAOEFAADZAQAA9/8KAKrFLwAA9wYA0d8AAHD8BgAA8gYAkusBAPVfAAD4"
    "/wMAhvgKAAD3BQChnwAA8M8AABD9BQCH+wIA9r8AAIAvAADyCgAA3rYAYD/dAuCP/wrA/78BAGE/AACgDgAAgC0AAPk9ABDvAQAg"
    "vxQAMP/+AiDf8QkA+fkHAIDfAgB4AAAAywAAAJ8AAHD/SQBQ7/sFIP/ACAD/8QYA598BANEDAADnAgAA3VgAIP/8BXBPwAggf8AG"
    "APX1BQDQnwAAoAoAAPYGABCuAABwP3sAwI+fAaD//wYAoA8AAKALAABxrQAg7f4EQF/8AgC2/AUAAPAIEAHQCwCM1AgAcP8KAMVK"
    "AAD1/wMA8P8AAPPfAAD0zwAA+I8AAPp/AADITAAA12gAAP/vCkDfAQAQ+gkAAFANAABQDwAAuAgAAPkDAADyXwAA+v4AAK/wB0Af"
    "wAVAD8AFUG/wAADe+AAA428AANcUABDfvwBwH/0EMM//BwC09QgAAPIFAGzpAQDWXwAg3ZsAoP//CrCfAAAw/wgAALIOAACADwAA"
    "sQsAEP8EAFD/BQAg/A8AAOAuAADyCQAA+wIAQI8AANC/iANg//8HAOsaAAD/3gAQjvMCAPf9AgDAnwAA4c8AAPr/AADnvwBA/wEA"
    "YP4EAADwCAAA8wYAAPYBAAC9AAAw/6wFMP//CADEXgAA+/8DMO/yB4B/8AZAT/MEQF/qAAD+rwAA5C4AAJkEAAD/zgAwGsAFUAiA"
    "BoAIgAhQCKAGQE3WAAD2PgAQ3QoAEP0PAAD8DwAA/wwAAP8dAAD/CwAA/18AAP6PAQDyTwAAq54AAAGbAAAwTwAA8e8GAIBtAQCQ"
    "BwAA8QIAAPIIAAD4BgAArwAAQC8AAID/7wKAf/QIEJ/2BADDzwAAxq8AQI/sAAAAjQAAYB4AAFCPAAAA8gUAQfUIAPWeAQD53wEA"
    "3P4HAAD2BAAA7QEAoW8AAPcIACD/fAAA6f8CAOJPAADyvwAA8q8AAPV/AAD+LgBA/wgAMP8IAAD1LQAA9f8JAGHEDgAA8AkAZPsB"
    "AP//CQCiCwEA8gMAAKsAAAAQTwAA0R4AAPl1B0Bv8QjgD/YCsN/+BACF7wEAAM8AANIMAAD4BwAA/QQAQP+/ADCv8wgAj9AKAPzx"
    "CQCy/wIQ6xkAMI9PAAAwPwAA4Q0AAHCuAAAA8wQQE/gEMPqPAADAnwAA8m8AAPMvAAD4DAAA9g8AAPofAAD5CwAA+AoAAPpPAACJ"
    "rQAAQG8AANB/AABQ/QEAAPAEADf1AgD7rwAAkb0AALr8AQBP/AEA/PsBAADgAAAA4wBAjLoAAJJvAAD0fwAA9m8AAPVPAAD3DwAA"
    "+w4AAPYOAAD2XwAAwj8AAPYvAADXTwAAED8AAKFvAQD5/wgA8UgAANUAAAB7AAAAsAcAAPgHAACNAAAA7xgAUK/qASA/wAcA2qEL"
    "AKD/BQDSHwAQ3k8AUC4PAGCODQAA9xwAAPHaAQDU1AYAsO8BAGAOAAD0BgAAriEAYE+sAOALjwD0/68AscxfAACATwAA9y8AAG1s"
    "AAAALwAA0AoAAIDPADAH8gEgb/YBAPR/AADkOwAA8W8AAPCfAADhPwAA9i8AAPgPAAD3CwAA9k4AABAtAADADgAA5gAAEF4AAJAM"
    "fADAbu8BYP9fAAAwDgAA10gAEL/5AkBvgAdACnAIQAqACFAMwAUwX+kCAOg8AAD9ywtA/98ZMJ8AAAD8CQAAwB4AEHEvAIC8PwAQ"
    "/QwAAMbNAADO9wEAZp4AAOAbAABQXwAAAOYBAIrzAQDkzwAAcC0AAOAuAAD1BAAQ+wQAUP/PAAD50QcA9PYFAGDuAQDijQAA3NwA"
    "AGv2BAD1/wgAILQIAACwCSB9sQoAov8CAMEIAAD7BQAgXwAAUA8AAFCM7gNA/8kIAI2wCADhvwEAgYoDAPH/CADg/wMA8f8AAPav"
    "AAD6TwAA+A4AAIEYAAD8TgAA6K8AAADeAAAArQAg/98DEMjPBADyCAAA3AAAEP//BXD/nAHQPwAAUL8AAAD6BgAA8QsAEOQMADD/"
    "BgAAgA8AAPMDAACsEABAT7sAsC+uAdD/3wEAxAwAALAJAABQTwAA8QsAAOwCAFB/pwDA/88AsOzvAQAAnwAAQG8AAPV/AACWvQAA"
    "AMoAAGGNAAD4/wYAsY4CANAHAAD0AgBQzwEAUP4IAADgCgAA8gcAAPcDACCuAACwn4gDgP//BACB7gIQ/f8FcK/6BDDvzwAAw68A"
    "AJD/AwDw/wQAsM8CAMT/BAB55AwAALAOAADzBgAQbQAAwQgAAPZZAADDnQAA+h0AQH99ACALbAAAQA4AAPEGAADJAABAf9cDAPo8"
    "ABD9/xxg77wFIP8FAADoHwAAMG8AADBfAACnTwAA/woAAPZ/AADNrwAAY50AAPj/BgCRjgUAsAkAAPQDAACqAAAAos0DANv4BwCc"
    "+QgApu0FAADACIAB8AJAnvQAAMLvABDM/wdw/20BwD8AADD+AQAA8QcAAPAIAFD3BwAw/wUAAJAeAADyCAAA7AEAUE8SAMAdjgHx"
    "//8DULgfAACgPwAAsf4DEP38CIBP9gVQv+0AAMLfAADQ/wYA8P8HALDNAQDmXwAg/38AIP8vAAD2fwAArvYDED/wBwC6+wMA428A"
    "AEBvAADQHQAA9wIAQI9QALAe9gXxzv8DoKyvAABgLwAAkb8DAJyxBgB99ggApPwEAADABoAH8AUQrPQDANCPAADgLAAAYOgBALnQ"
    "BSCPgAhQDYAHYA2wBACs5gAAsX4AAKBdADD+/ACgj/sAgF6eAADnXwAAsP8BAOD/BACwvwAAtOwAAM/+BACf3wMAxcsHAACACAAA"
    "oAdgTeAEANfvAQCCBwAA9i8AYL9PAFCvHwAg/w0AAPKcAwDkwB4AwXoAAPoBAAD7AQAQ/wEAAPgFAADgCgAAoA4AALVvFAD6/68Q"
    "/woAQJ9PACBcPwAAYD8AAPENAAD4BAAg30QDIP3/LwDWLAAAd8oAABCcAABwfwAAAOUBEAdwCxBPkAsA1fwDAEAvAADxCQAA+bEJ"
    "MI7gCqDP/AjQ7/8FAADfAABAnwAAztwDAI9oAQB+BQAA/y8AAD2GAAAA0wAARcgBEP87AAChCgAQrQEAQA4AAGAMAACAW7oBUN+m"
    "CACacAsAwe8CAONoBAD7/x8wP/IGUAjpAACX3wQA+v8DANAHAAD2AgAA924AUF/6BGAv6gEQ/R4AANqPAAAv8wYAP/gGAPZLAADn"
    "CQAQX3oAAC3TAAD1/wEAAKUHAAAgDgAkAD4A9f8cANM9AACO9wEwD5AGYA1ACEAJQAgQDVAIAH6wBADz7wAAjwAAIN8AACD/BgAA"
    "+AoAAOAMAACgLwAAxb84APz/n0D/AQCA/gQAUPgEAADACAAA8QcAAPVjCTD/2A9A//8HAPkaAAA4TwAAUC4AAPJ/AAAA8wJABtAH"
    "YB31AwD6XwAAIF4AANAPAADzkwwQjvANsK/4CvP//wMAIM8AAEB/ABDcDQBAawMAcIsWAFDPzQAAANAEAACACCCK9wMQ/VwAANEA"
    "AACnAAAQLwAAQA0AAHBMmwFA/8gHIK7TBwDSjwEA9s8DAM36AhA/ugAQFz8AAHBPAQD6/wQA8jgAAPYDAADXGwBgzp4AUD6aAAD4"
    "LgAA4W8AAJnzBABcsQgA958BAOcKAHBPuQCQDfcAMP//AwBAxAgAAEAMAFtwDQDV7wYA5j0AAK7XAEANwANQC3AGQAtACCAMYAYA"
    "jOICAPSfAADLAAAA/QAAMP8EAND/BgAw8woAALAPAACibwMA9/9fIP0KAMCfLwCgGG8AECFvAACgLwAA8gkAIP+JBhD9/z8g/R8A"
    "cK1PAACALwAA+K8AAEH6CAAA8AkgbPYGEP+fAQAgfwAAsC8FAPVmDyCv1A3Q//8KYET7BAAA7gAAMH8AAMkuAABsBAAAHAMAAPnP"
    "AABEwAYAAEAMAHmkCwDp7wUA8wEAAIwAADANAABADAAAULrvASCvdAoAj8IIAMOPAADjzQ4A6/wJAF/zAhAZygAAcO8GAPS/AQDw"
    "BQAA1gAAAOoaAEBufQBgDHcAEK8fAAD1PwAAbfYFMA/EBwD8jwAQ+j8AYE3KAEAL9wAg/u8CAEGjBgAAIAwAMyANAPr/CwDzCQAA"
    "jlsAMD/hAlAMwAQgDGAIIA7ABQCM9QAA0V4AAPmOAGBP8gNQX/UEAPn/BAAAkAgAAIAIICrBBhDtvgEQyrwAcI5oAHB7AwCA340A"
    "EAPhBQAAQAwAO6AMAPrvBADK/AQAj1gDQI8GAGDPjgAAAfIAAADgAwBL+AMA+l8AALEPAAD7BQAwHwAAUAwAAID/7wMgv3IMAL6U"
    "DQCy/wYwzE4AEE0EAEBOAwBQza4AAACwBgAAQAgAJoAIIP3/AgDmGwAAX/YAQA+QA4AJQAhwCEAIQAiQBBAt4wAA5U8AAOZ/ADBv"
    "4gNADfEEALr5BgCB6gUAAIALEFygCwDX/wQA508AcE/JAGAf5AAA2X4AAPJPAAB+8wQAP9AIAPevAQDXGgAQP6kAME+9AADG/AAA"
    "AMAFAABQCxArcAsA1/8EALFvACCv/wAQXrYAAOU+AADhbwAAivYBAJn0AwDxbwAAcAgAAPACEwCoIC8QT5MMgP//BhA06QAAAD8A"
    "AJAKAADzBAAA8AsAAPAvAADgjwAAcO0AAAD0BACT/VwA8///APfeCgDK+gQAX9gAEBc/ACDbzwZA/L4CAPMDAADZAAAA8P9MAOSg"
    "DAB48QQAAMgAAIHOAwDW3wIAoAoAAPICABD6HwAwr08AALEPAAD8PwAAEPsBgAPzB9Bv+AYA/H8AMP8vAECuBQBg/zoAQM/eAAAC"
    "8QgAAIANMK+XDzD9/wgAmgAAAPgCAAD4BgAA9R0AAFFuAAAAuAAAyPlGAPf/7zD/BwDAvQ8AwEUPAAAwTwAAYD8AALAPABD8jgUg"
    "/f8vAPf/CADK+gIAbdcAABpdAACpjwMQ/P8FAPEyAADpAAAA5xwAcF6oAIAbpwAQ+U8AAOHOAAC3wAcAW7AIAOTPARD9BwBQzz8A"
    "AGmfAAAArgAAAL4AAIBPAQD5b18AyP2/AMMJAADM2wAgL8AFQAhgCIAHQAhwB5AHME33AgD2XwAAaAAAAOYAAAD2AwAA+gkAAGEv"
    "AAAAfQAAhO5IAPn/3wD7BwAQvw8AIF9PAAAiPwAAUA8AAJAOAAD5fgYA7f5vAMIJAACsAQBADgAAgAkAAIBZiwBA78YFAH2gCADj"
    "/wUA+BsAAEpqAAAQbQAA8C8AAED4ARABkAdAXaMIAOf/AgDIXQBATbkAAGBNAACgTwAAAPQCcAjAB4AZ8wMA+m8AAPT/HwDa+AgA"
    "XvMCAAG8AABSnwEA/+8DAPEJAADnAgAA4Y8AAKLlAAAg9wAAYK8AAADjBAANQAwAbYQNAMD/BgD3HAAAv48AAJNvAADQ/wEAIeUI"
    "UA6QD0B/1g4A9/8EAAAKAACgCAgA1CIOIM6HCpD//wcAAPUBAADIAAAAjwAAkR0AEOwFACBfAABQDwMAMP//AyC/kQsA28YLAGD/"
    "AgDiCgAArAAAIC8AAHAcZABw//8IAN9ADADKhA8Asv8FALEKAACtAAAwDQAAUAsAAFDOfAAAz7UKALqkDADBzwMAMC8AAKA9CADx"
    "lQ8g7PUJwP//B1Bl/gAAEM0AADBPAAD1PgAgftQAIF/1AQD3/wMAEHMKAAAgDgCYJB8AtP0LAPUCAADxCAAA4AwAAPI/AACSbgAA"
    "ANYAAKL8RAD0//8AzP4BEL9WAGDPBABgi20AAADRAAAAkAMgFuYDEPuNAADoKwBgf9YBgAugBHAIUAeABHAIIApwCgA+9AMA9X8A"
    "APgbAAAulQAAHsUAAPbvAQAwpwcAAEAMABYgDgD5/wwAnIkBII+IAoCMBQCAn54AIAHhAwAAYAsQSOUJEPt8ABD+DABQn28AMAue"
    "AAAAqgAAAK4AAKBfACD/jiwA+/9fAMX/AmCf+gQwPuEEAPrfAQD2rwAAP/IDAI/hBAD0vwIA/QsAIL9PAACenwAAII8AAEBPAACQ"
    "HwAA+Y9bAMn9vwCqfAAA38UFQE0gCIAEMAiABHAFYAawAhA9wwAA938AAHoDABDPbgBQDNIAQAxAB4AFQAhQCFAKAD7kBgD3rwAA"
    "uAAAAPcDAAD2CgAA+h8AACAvAAAAnwAAxv9YAPT//wDzzAcA3P0GAALmAABBrQEA+f8IAMR8AQDgBgAA9AIAAMEJAACrAgBADgAA"
    "UAkAAIC67wEgr3MLAI2BDADC/wUA888AAPbmBgAw8QYAEP4DUCj9A1APkA0Qv8gfAOP/CTD/AwCAzgoAUGsOAABwDgAAoAwAAPAJ"
    "ABD7jAVQ//8PAKsAAAD9AAAA/AUAEP8FAADTCgAAoA4AALWfFQD8/88AQC8AANANAADzBhoAzHEfUD/gCvKN+AP4/98AAHBvAABg"
    "PgAA9RcAAKoAAABcAAAA/r8CIN+DDAD4RS8AQP4NAOY9AAAs4wAAANgAAMA/AAAA2AEQB3ALMC1wDQDl/gYA2gEAAPcFAAD2BgAA"
    "9g0AAGAvAAAwjwAAt+9JAPbt/wDynwAA0/sAACDNAACQvwAwE/YIsA2gDDDP9wgA868AANM9AAB80wAAD8UAANr+AgBx1gQQBFAL"
    "IG6SCwCk/wQA0gEAAPAGAADwCgAA0B8AAGBvAAAAnAAAxf4pAMLMjQD0zgsA9/0KAHr2AgAXzAAAhc8BQP/vAgDwGQAA9QIAAFDM"
    "AAD1FgAAXwAAUC1HAHD//QMwnxAMAMpiDQCA/wUAs/8AAP/VACCfwAAQ+aoAAGDPAQDi8gUAqOEEAPOfAAAQPwAAgA15APIEXyDt"
    "qw+w3/8KAADzBQAA6QAAIG8AAPkuAAA5iQAAAKYAAKAvAACi+wIwAeAEoH3CBADnrwAA4QIAAPAFAADgCgAAsB8AADBuAAAAyAAA"
    "6v04ALL8/wAQLwAAUA8EANAYPwD1Ug9Q//8I4Mz+AgAAzAAAIF8AAPYcADBf2QBQDMAGgC5wCHAsQAhADJAHMF/nAgD3PQAwuswG"
    "gL6IBIB6AwCA708AIAKWAAAAxAAQSKoAIP8tAAD+PwAAVo0AAIBfAACwrwAQA/QIYA+QD1Bf5g4Q++8CAOIFAADJAAAQHwAAMA8A"
    "AGD/3wEgj3QLALyBCwDD/wQQ/BoAgDyLAMBtjAAw//8BAADQBgAAYAsADVAMAPz/CADABAAA5gEAAC4AACAeJABA//wFMG9QCwC5"
    "1AUAsZ8AAKsAAAD7AAAA+wUAAP0LAAByLwAAIG4AAKbfOAD4/88A9N+tANz6LiBv4gYQBbkAAMfvBgD4vwIA8ggAAPcEAADJzAYQ"
    "bkQCQM8ZAECPuwAAAeAEAACgCAAagAgA+f8EAGAPAADADQAA9WMPEL7QDaDf/AWwzO8CADCfAACAPwAAkA0AAPIIFwDaYV9gv+gP"
    "0P//CSAC+wEAQH8AAJAvAAD2/wwArfgFEB/JAAAEfQAA+v8JAOeMAwDzBQAA+AAAAMgFADCPHAAADjwAAAM8AAAwDgAAUAwAAPVG"
    "BAD+/w4A+ggAcE1+AHAthwAA918AENxvADAv1AZAT7EMAPfvAgD5BwAA3i8AAJePAAAQnQAAAH4AAEBfAAD3jwYA+fyfMP8IAJC/"
    "LwCwSi8AIGQfAACgDQAA4g0AMP//HTDPyBsAx00AAG8mAEB9KABwr+oBIAKgBgAAgAgAG6AIAPj/AgD0uAcA+v8GME/2ADAIjQAA"
    "9t8GAOOdAwDgBgAA9AIAAMYtADBv8QBQ3/wCIP38BAAAgAgAAYAIMC+gBwC13wEg//8EQG94AUB/AgBA/28AAEX6AAAA4QYgTvQI"
    "MP3/AQCQDYYA8wOfEM10P3D//wpgrO4CAACtAABgLwAAwAsAAKAJAAD1AFkArnBPUH/1BrD/7wAwtI8AAHAvAADADAAA6wUAYExN"
    "AKAK5ABwXf0CEMrsCAAAcAwAARAPAItUHwDZXwAwj9QAYBqQAlAEQAiABEAIYAZACQAtcAgAyP0CALKOATCe2ARgG+QBAOlvAADA"
    "rgAAxNIFALSxCACR7wIQ2xoAgDytAIAr+wEQ//8CAIKTBgAAcAkgPJAMEPnfAwD4bwBQTvQAYA3xAhC7rQAA8T8AAJzVAgAv0QgA"
    "+O8BAMMsAACr5wIAG4AEIC5QB4AJYAgwDcAHAG/LAAD0GwAAxZwDAPj/BAD57wEA+88AAPzPAAD7zwAA9M8AAMZsABD/BACQvw4A"
    "wFoPAECHDQAA8QYAAPUCAEDvuhwA/f8bAMadAHBu9wNAVm4AAMBOAAAA4wIAAJAHABOQCADl3AIAgA4AAPUXOSDP0E+Qr/oLQP/v"
    "AQAQnwAAUD8AALAOABD4/wmAz4gFgH4AAJD/DACAjT8AABBPAACAHwAA/AUAANUBAADcAQAAPwAAMA8AADD/ngAgj4MJAC4wHwD2"
    "7wUAxuoIAO/9AxAMuQAAQI8CAPn/CQDyBgAA8wEAALgAAAD3jwAAf/YDQA/XBAAv6AgA7H4AAPkGAAA7LgAAtaoAEPsbAGD7fwAQ"
    "kr8AIM7PAACD1AQAAKAIAMTvBgCOBAAA4hkAEMyLAEAe0AOADaAGUB+ACQAPsAkAvfoEAPNfAACmOAAA9p8AAPlvAAD3rwAA+48A"
    "APefAAD6bwAAlLwCAPgvACDfrAAwH7kAABCPAACgHQAA+AcAYP99FgBX/C8A118AYH/mAJAVmgAAgF8AABD2AQAAEAwAVFINAMbv"
    "BQBgHwAA9QpoIL+Qb4Dv/h1gzPwDAAC9AABgXwAAoA4AEPf/DqC/NgFw/wwAgM9PABAEjQAAAI8AAHAvAAD9BQAAwgEAAMsAACBP"
    "AABgr1oAUP/sBkA/gAwAnrQNAOPPAwDz/wwAzPcGQAzZAAARfQAA2P8GAPxsAQDwBQAA8wIAAP4IAABPjQgAfOwFAPRfAADgDgAA"
    "qCsAAA08AAD+HAAA/C0AEF/VABDXgARg2/0EEMncAQAAsAYAAFAOANr8BgDDBwAAzkwAIA7RABAMcAUgDSAKAD8wDgDHuAwAsr8C"
    "ANMaAADzTwAA8S8AAPYfAAD0HwAA9D8AAPcPAADiXwAA/R0AYK9fADAPmwAABIwAAACPAACATwAA9d8aAP3/nwDmvwBgfvQEcAf1"
    "AgDgXwAAQL0AAACwCAAgpAwA+b8DAIAPAADzCAAQzUAdYJ/3CpD//wIAFK4AADBfAACwDQAApf4LIP9FASCfFAAg/78AIBngBAAA"
    "4QMAIH0AAOcHAACRHwAA6QQAAD8AAGANAABAzt8DIN80DQCJQh8AkMwIAMXPBBB89QUgCZgAADIcAEDszwRQ9AEAAMEAAADDAAAg"
    "zwEAQN8NAAA+zwUA9b8AIN0uAFANhgBAC/EAIPx/AADZBgAAfjsAQIeFAID6ngAAdNkBAABQCwACwgYA6n4AAPUJAABvawBwCeAA"
    "UAmABkANQAgQD0ALAH/1BADyXwAA7AYAIH+tAAAv0QQA2fgCAPbfAAAg8wAAYa0AAJ0oAAD4/wYgvwUAMF8AAFD/DQCgbV8AMAGL"
    "AABgTwAA+QgAALb/A1D/BQCw/wIAwM8MACBBDwAAAE8AACA/AAD1DQAAYD0AAOELAAD3AgAAygAAAP3fBQD6tQ4A96UOADD+CQD3"
    "/wYA3BUAAH8BADD/DQCwX08AUBM/AACwDAAA9wEAAMAGAAD4TQBQb8MAcB6wBTAOcAoQLpAJALn2BQCgvwAA2hkAIH+KAADMtwAw"
    "/38AAIWsAQAAsAcAADAPAPv/CBDtAgBwngUAYD1sBBDO/gQA8n8AAOvYAEBP4gIQ7G0AAPU+AAB8wgAAP8ABALz6AACi3wEAAOAE"
    "AGD8AgDXBAAA9G8AAL37AADf/wcA978CAPUvAACfvAAgb/gAAOeNAAAwXwAA4wq5EL0gj3Cf+x9g3/wJAAD4AgAQfwAAUC8AAPZc"
    "AAD43wEA+M8AAPivAAD/XwBQ/x8AMP8vAAD6PwAApdsMII7YChAG1AAAEC8AALCPASD/eAAQyQAAALcAAADy/wAAnMsAUA99AFA2"
    "XgIAkP8JAPcpAADxAwAA8wAAAOd/AGCP9wSwFuoBEEBvAAAg2wEAALAHAEPoAwDaTAAQ+f8DgM+IA2CfAwCA/08AMEa9AAAA2AAA"
    "ha8AAPsbAADyCgAA9F8AAPg/AAD5PwAA+D8AAPgfAAD1DgAAwT8AAKAbAADxiABQpMAAcKhwBWAKIAkQDSALALakCwCQ7wUggAkA"
    "0OV4AMAlkABwBTAFMAogChANEAwA1ZUNAJD/BwD2zR4ATvQEEAd6AAAgHQAg6c8AQPZCAQB2AAAASgAAAPkGADAfrwgAb48AAPML"
    "AADhDAAAlisAABwNAADsAwAA+z8AUM/bADAd9QAAALwAABB/AACgDwAA/L8BAN3YjwD2XwAQ7/gBkB3ABlAJkApgCZALcB+wCzC/"
    "/QgA+M8BAOCeAAD0rwAA/S8AEP8LAHD/BQAw/wcAAP8IAADDDAAA+Q4AAI99AAAMiAAAAIwAAABfAACQDQAA+q8ZAOz9XwDhjwAA"
    "+ksAALEBABA8AAAg740BMP/9CAD89wwA0f8IAPuvAOGf+wHhA+wAAGB/AAAA+AUAAMAKAELlDQD7/wQA+f8EgJ/nC1AV/QEAoH8A"
    "ABD7BAAA4AgAQ/YEAP6PAAD6zV9Aj/wGYCx/ABCVHgAQ9ywAgP9cABCrAAAAbgAAEP2vAICP/wAwWG8AAECfAAAA9gUAAFAPAGjW"
    "DBD/7wMQ/J8AsJ/3A9AT+gEAsI8AAFD/BQAAoA0AR/gJAP3PAQDhCwAA+QIEIG9wL4Bv9gxQ//8DAEGPAACQHwAA8A8AAOEGAAD3"
    "AQAAfQAAAF0AAAB+RQEA+u0OAOlBPwDB/RkAcAsAAPEKAAC3AAAAixEAAPz/BQC+EA8AtjEuAID/BwDQDQAA9wMAALwAAABuAAAQ"
    "z78DIP+ZLwDLMW8A0f8fAPMHADC/EQeAL9APgN/+BQCY3wAAgC8AAMAMAADzBAAAxxsAAKzlAGDd8wCAuY8AEKu5AQAA0AYAAKAM"
    "AMjfAgDwHAAA9W8AAPI/AADyHwAA9g0AAPEvAADzPwAA8B8AAID/BwD/igEwzwUAgP8/AIArnQAAANsAAAC8AACwLgAA9QgAAFps"
    "AEAO0gBACpAIUAiACCALkAYAb/gBANQ8ABD8KgBAHsYCcA/hBDDPrwAA8wEAADAdAAAAagAAy00AEPz/BECvFAFgDQAAYM8FAHC7"
    "DwAAQC8AANIKACC/AAAA+ggAQN8/AAAcawAAAIwAAABeAABwbwQA9f9PAPuJBhDuBgAgHy4AAHpqBADB7wUA408AEF/GAEAK8QAQ"
    "zFwAEPuvAIC/9wFwC/UCAALnAAAAywAAMG8AAPW/BgD+3V8A4m4AAPr7AjA/wAYwCZAKoAuADHAfsA0A7/wKAOPfBQD1LQAQv9gA"
    "UA7gBZAfcAmQDVAOYC9QDyC+5QwA9f8DAPQsAAD5LgAA/A8AAPscAAD5DgAA+gwAAPkOAADEDAAA+tgGAO3+AhAPfQAgl98NAPp7"
    "AgD0AgAA1wAAAEwAAACQLwAA9RsAAP0BACC/AAAgv0QAIP/vGgD5N28AcP9vEOpNAMBb6ACAI4wAAPNPAABB5wUAAHAMAACxCwD8"
    "nwEQ/woAcK8PAEAcTwAAMh8AAEAPAACwDAAA++4/EP//XwDzLAAA8W8AAPQvAADzbwAA9A8AAPFvAAD0TwAA9G8AAIvUPyD/7xlA"
    "bU8AAPIKAFD9zgKA/8wCAJ8AAAB/AAAAkAwAAPQFASCeUB+An/wJUN/dAAAQfwAAQB8AAMAMAADRAgAA+AEAAH4AAABuAAAAX5kD"
    "APydHgD4EF4Asf8dEPq/AIBL5wBwIX0AAKBvAAAA4QUAAHAJAAKzBwD/fwAA7SoAAPb/AADw/wQA9O8CAPh/ADD/TwAQ/x4AAP49"
    "AACzzgMgraQMICuQCQAwqgEA9y8AAAM+AAAQLQAw5wUAAMsCAACPLQAAt5kAQMx/ACDKyQEAAHALAAAALwDG3AsAsV4AAPC/AAD1"
    "jwAA9V8AAPQ/AAD5LwAA+A4AANKfAADU/wcAr/cBcAx8AJA1LwAg+88HUPqMAwDzAgAA5gAAANAGAAD1CAAAiwAAAE0AAAD+7wUA"
    "fQAdAGpQDgDS/AQA+ggAAE87BQBepwcA1LwAAOIMABB+TABwCsMAELqsAACADAAA9QMCEF+hH5BP+Qdw/38AAIIvAACgDQAAwAoA"
    "EPx9AMBL9ACAA+YCAJCPAAAQ1QMAAHAIAACQCgCq7QEAwRsAAPFPAADzLwAA+QwAAPwFAAD+BgAA+QgAALIdAACQCwAA9QEAIE8w"
    "CXAO4QyQz/4BAIZvAABAHwAAkA0AAPUcAACIxgAgBcACQA6ABnALkAcwDcADAF/pAQD1SwAQ/b8AoH8AAFBPAAAg7wUAMP8/AAAB"
    "uwAAUZ8AAP0dABD9zwHAb/wD0KqfAAD1TwAAIOoBAADxBwAT9QkQ/r8BAOI/AAD3CwAA/QEAEL8AACCfAAAg/58AAP36BwDz/wQA"
    "/G8AAM/3ARD/9wQQ/O8BAEDaAAAA8QMAA/IGAP3/AQChBwAA1gAAAF0AACAfJQAw/5sFIG8gDgCqUQ8Awe8GAPMsAAD2PwAA+Q8A"
    "APkfAAD5DwAA+Q0AAPcNAADjPwAA+8x/MJ/4ChAK5gIAgf8LAPx/AgDUBwAA9AMAAMwAAACizwAg7xgAIE8AAGDvPQCgf8sAAAH0"
    "AAAA9wIA4o8AAFAOAADxBQAAmwADQB6AD6DO/QZQnPsAAACbAABAHgAAsAgAAPgCEiBfQD9Qj/sJQO/9AgAAqgAAMD8AAJALAAD4"
    "/gAAvb8AQB5dADCHTwMA/t8HANUCAACmAAAAagAAIP8DALC/DACACg8AECMPAABADAAAwQkAAP7dPyDtzBgA6T4AQB20ABAeewYA"
    "38kDAOEOAADlDAAAHFkAAMs9AAD1PwAA/X4AAE2NAAAAXwAAcA8AAPYJACD/nz0AJfk+APctAAD+nQAAjqkAACHJAAAAjQAAUE8A"
    "APZfVQD2/98A+o8CkM+YA9CfAABw/woAcI1PAAAQXwAAwh8AAP0GAAC4qI4wv/wVEA+LAABRXwAA8+8AAPcDAADWAAAAewAAAPgJ"
    "ABCvnwAgJv8BMJnvAABXXAAAAMcBAADyBADZrAEAod8AIP9pAFAfAACA7wUAsN8/ABADywAAIK0AAOE/AACQPwAA9wcAII8QB5AO"
    "0g6A7/8GEIfPAABwXwAAwAwAAM8DAACfHgAArB8AAPWkBwCwvgAAwb0AAGyQBABP1QYQ/r8CAJ6iCwD15QUAwP8FAOeOABA+tgBA"
    "CLgAIM0vAAChLwAA9zcFMH/zC5Ae6gKw/68AIIQ/AACQDQAAwAkAAMIJAADxlwAAsOEBAIrbAQDpnwAAAKEDAAAwLgDl7RoAwhwA"
    "IMy2AKANoAKAC2AGcAlACTANgAwAzPkHAMGfATBeAAAg/xMBAPbUCADg3gEA8h0AEI4PAFAMPAAg3j8AAP8qAABfuAAAyeEEAPb/"
    "AgBAGwAAAHcAAACyAADKvQAwnwIAMN8MAAC8rgYA8q8CAOYfADBPeQBgHZoAIMtOAADkLgBQv6cAQE+wAXAecAVACnAHEAzAAwBp"
    "1gAAoE4AAFDfAQDi7wAQ/c8AkO9vADBlTwAAgC8AAJA/AABA3wEg/gYAwM4PALCCDAAAsAsAAPIEAADXAAAQ3ogHIP//CBD5bwDQ"
    "r78AUEN/AACAfwAAEP0FAADSCwBc0w4A+u8FAIAPAAD1BgAQrnAHUD/xB4C//QMQ+98DAHAfAADACgAAxZ8AcK8DAIANAACQTgYA"
    "QM7dAQAA8AQAAPQHAMSNAAD2BAAQfgAAQB8AAFALEgBAzd8DEC+BCgBMsAwA1OwCAOj/AgBr9wEAAMoAEPv/DCDcLQAA4QQAAMgA"
    "AAB8AAAQmlsA4RiyAOADWwAgzAsAAPJOAABbwQIADeACANmfAAD5PwBgv8oAcB/xBTBv+QkAte0KAACgCgAA0AsA+v8GAOM5AADb"
    "6AIgP5AEUAxACIAIcAhQC/IDAF59AADlBQAAAM0AAKDvABD8vwCwz48AYHRvAABgXwAAQI8AAAC/AAD7HAAwn18AABavAABQbwAA"
    "kA8AAPMGAAD6VBgA/f9vAOffAZCP+gdQAe4BAEDPAAAg3wAAAPYHAHn2CQD1vwMAEJ8AAKA/AAD5NQZQj8ANwE74CcD//wAAJL4A"
    "ABCfABD8/wBwnzQAoB8AALCPFwAg/f8FAADQDgBy/QkA/lwAANN/ABD8CAAgjwAAgE8AAJCvSwBg7/0DELviCgDy/wYA1f8GAGzU"
    "CQAA8QMAINoCIPzPBRCWCwAA8AEAALYAAAD6jwBQb+cAMD+dAAD9CQAA+gEAAP8GABDPCwAA9QoAAPgqAADcvgAA2vgCAPT/CAAw"
    "uA0AAFBPACFyXwDj/xsAtxMAEP7dADDPYQZASkAIgAiwBXAJ4gAQTKwAAOYJAACAPQAA+I8AwP8vAJD5CgAA8ggAAPQHAADzCgAA"
    "cC0AIOrPAKB8ygAAAK0AADA/AADQCgAA9QEAAP78ChDfOQAQqK4AwGr2AjAA5wEAALkAAADyAQAAgAwABLIJAPzOBACwCgAA+AUA"
    "MK+0ALAN+QDAXf4IMOy/AwCgCwAAsAgAUM/MBKDOnAfACwAAUK8AAADzAwAA8AQAEPcEAEDPAAAAYAwAAPUHAACcAAAQXwAAEK+c"
    "AgCNUg0AtiE/AIDrKwCS/g8w36gPEAKwCQCz/AsA7M8CADA/AABwCgAA4AUAEPzfAUD/9wQAb/sCAPlPAAD4CAAA/wsAIK8MACD9"
    "CgAA7RkAUM/MAWAv8gUwX/MJAPn/CgBg9wkAAPYFAPrPAADpbwAgz9EAMHyABGBLcAJACcABMAm0ABBcPAAA5gUAEPlNAIBMiACQ"
    "C/UDQI3/BgCEsgkAAKAIAAfjBgD3jgAQ588BcJ+2AbBMAQDA/28AMEnLAAAA+AAAAN4AAPY/ADDf/wtQ74wKIM8AAAD3DAAAcI8A"
    "AAC9ADCGfwAg/wkAAOIOAAD3BwAAzQAAEI8kAED//wMgz2QvAI1jbwDS/hww7v8KkJ8XAKC/AQAQ5wkAAHAPAABgDwAQsQoAMP8E"
    "AADn3wEA39MIYC+ACGAPYAuQDdAJUA/1BUCfzwAA+DwAAMZOACAv8QAgDvMCAF3uBgCCdAkAAJAJAAXlAwDXTAAQndgCoAfAApAG"
    "aQAQrQoAAPkCACBcHABACVkAELwIABDnCgCgXHkAoAb2AFC7/gEAcqEFAACQBQA10AUA5M4CAO38BABf9QUAfU8AAPsCACCtBgCA"
    "FQ8AUBgPABD6CAAAMC8AAMAMAAD1Ugwwj7ANkE/3CJD//wIAAM0AABCfAAD3TQAA958AAPGfAADznwAA+I8AAPpPAAD5HgAAxI4A"
    "APzPAABG2gEAAJ0AAJX/DDD/OwAA1wAAAIsAAAA/AAAQyf8EEIv3BAAA2AAAtf8JAP9dAgDyBQAA6QEAAK4AACD6/w5wS/YJAGDP"
    "AADzCQAA9QgAALAvAABhLwAQ/wYAAML/BwDahwMgbwAAsH4VAFD//wYAROQIAEDnBQDyXwAAQM8AAPW/AID/TwDguy8AAHAPAACQ"
    "LwAAkD8AAFBfACD4rwCwr/QBwA3QBbAN8AeAD/AGYB/1AiBvzwAA9x4AAPi/ACCv5ARgL4AIoAywBpAL8AaADPcBIH+fAAD6HAAQ"
    "/W8AoJ/7AHAJzAAAAG8AAIAfAADyCgAA+povAP2/BAD5PwBwf38AIAIvAABgDwAA0AoAAPMzBQDr+gYA+10AAMPfABCe2gAAAqoA"
    "AHP/CgD/PwAA0wcAAPACAAD0AAAAxa8AYN/zAbBYpQBAKywAAPYGAADyCAAA2AgAAPUEAED/HQCQrm8AEGEvAACAHgAA9QUAAO0A"
    "AFCfiApA//8JAOYdADCvtQBQD9AAYAzAA3AM0AMwC8UAAE1PAAD1BgAA8QsAAPAfAADwDgAA8g4AAPEPAADgDQAA0AoAAMALABD6"
    "XwCwn6wA8AZ+AABgXwAA8QsAAPUEABC/yB4Q/88FAOAdAAD0CwAA/AEAEP8eAEDPyAcgj4AvAOr5HwDh7wIg+f8CsFv5AwAAyQAA"
    "APYBAADgCQAAwAwANfYHAPyfAQDo3wGgSfYDABDaAABwLgAAcB0AAADYAQAA8wQA/p0AALT/AgCI6QAAAMsDYP//BjC3DQAA8AIA"
    "APMAAADFAAAA6f8CcH/kCAAA9QQAAE8AAABPAAAAxwAAL+gAAPo8ACD9/wRwjPgMAAD4BwAArgAAAPwDAADyCwBE9wog/88BABBe"
    "AACwCwAAyQEAUB8gBOAH0Arw//8FMIivAAAwLwAAkAkAAPMEAADKAAAAjDQAAP7sBQCsQA0AuWAfAID+CADgHwAA9gsAAP0CAADP"
    "AAAw/68BIM+0DADq5g8A0f8KANAvAAD0GwAA/QEAAJ8AAEDvjwAQ/9gJAKuwDwDi/w0AQH8AAPMMABDOIAugDtAMsM//BUCKvwAA"
    "IE8AAGAOAAD5KgAA76sAEJ/8AAD3/wgAoPYKAADxCQAQ9wgA9u8BAPYLAAD5XwAA+E8AAPoNAAD9DAAA+gkAAPkKAAD0PwAAyv8I"
    "QP9bBKA8AADACwAAYO8IAAClPwAAhD8AAP0LAABX3gAA/5YCQH9ABGAcUAeAB8ADQAjEACBcTwAA9gYAAPl/ACC/9AJAL/IGAL39"
    "CgCh/QYAAPMHACDtAQD7bwAA+X8AcM+3AtAdAACgrwcAAMivAAAA9QMAAfsBAPdvACD7bwCwn94AcAGdAAAQjwAAsR0AAPUFACCf"
    "QgQg//8fIPndArBLogRgLMQAAOYtAADhDAAAeA0AAFwMAADtAwAQ/I4AQI/6AwAA9QMAEPwAAKBfAAD1CgAQ/qYLAP3vGACLXAAQ"
    "v+YCQAuQBEAIgAZgB7ADUAjVADBdPwAA6QQAANRvAAC/4gIwHsAEUAyQBVAFwAJACdICAC1+AAD1BwAA8xwAAPNfAADyXwAA8F8A"
    "APQvAAD0DgAA9g4AAPIOABD9zwAwbOsAAADJABD5/wkg/F4FAPUBAACbAAAAPwAAAJEvAAD1FwAAjgAAAG9IAAD/7QcAPjAMAJaX"
    "DwCg7gIw/P8DYJ/5BgAD+wEAQH8AAHBPAAAAvQAAVO8AMP9vABD9XwBwSsoAAAB7AAAgLwAAwAcAAMYBAAA/UQMQ//8DAMGPACD9"
    "jwDQ788AsHYvAACwHwAA0A0AAPANAADQDQAA+S8AMEtvAAAALwAg3P8LIPxrAQDzAAAA5QAAAHsAAAAgPwAAwA0AAPgSABCP0QuQ"
    "f/wEUP2/AAAgXwAAQC8AAHAMAAD0CAAAvAAAAK9oAQD/qAgAfgAMALhQLwCQ7gUA+r8AEHv2AwAA+gAAAH8AAACfAAAA1wAARfoA"
    "APqvAADELQAA9V8AAPVvAAD5DwAA+g4AAPwMAAD1CwAA9g0AEPefANF+7gBggY8AAPMJAACwbwEAAPcLABWwLwD6/wcQ1z4AoC2l"
    "AMAE9wBgmv0BAELgBAAA0AIABuUAAOVeAADDPAAA9E8AAPVfAAD7DwAA/A4AAP0JAAD3GgAA1U4AAOUvAGCvjwAQBIgAAHH/CAD9"
    "TwAApgkAANAEAAD1AgAAkA0AAPMEAAC8AAAAv0gAAP/IBQDeEB8AyEAvAIDcGgD7iQAA3vYCAGmmAADhDQAA0QgAAHUMAAANCgAA"
    "7QgAAGBvAAD1CgAg73ABYD/zCbCP+wYw//8BADB/AABQPwAAxa8AgF/cAAAwTwAAUD8AACCPAAAA4gcAANALAPW/AwDzHAAA+g8A"
    "APwMAAD9CgAA/wEAAP8AAAD6AQAA0gkAAIAOAADyCgAA/DEFUG/yCbAP+Aeg/78BEJdPAACgCwAAxQAAAK7OACD/uAIwv5ADUCzA"
    "BBAM0AMAbdgAAOM8AHD//wuAnwYBMD8AAADLAAAA9AEAQOAEAJD5AwBQ3wAAQP3/A6B8+AgAEPwCAECvAACATwAAEK8AUEffAFD/"
    "fwAAwE8AAPcpAADsAAAAvwMAMO+PABBvwAgAzNQMALH/BCD+fwBgX9YAQA/5BiD9/wkAQfIIAADxBgAQ/AIQ/m8AAMAfAAD0CwAA"
    "/AEAAN9IADD/+wcgr0A/AMhkXwCx/w0A4AoAMP4NAPL/BQCx/gEAAPgBAAD3AQAA8QUAANANABDI/wNQjvoAAFLOAjD/zwgw5gcA"
    "APIBAACKAAAATgAAAN/MAkD/bAAATwAAAHsAAADnAAAA4AYAQOUIABD/BAAAMH8AANA+AAD2YgYgT/AIgAz0AbDOrwAgeE8AADAv"
    "AABwDgAA9AUAAJ4AOnAPkA/Aj/oKgM/PAQBQPwAAkA0AAMX/BwCatAwAANAHAKL/DQDerwEAQy8AANAJAADWAAAg/QoAYK0PAACA"
    "DgAA4QkAAOkBABB+AAFAX8cOMP+vARDzLwDyz28A8WcOAFDuCgAA9wcAAPaNAADI9wAA9O8AIP8fADBbTwAAAF8AAEAfAADiBQAA"
    "rwAAUD9DA0D//wsg/a8A8nz6ADAB3AAAME8AANAJAAD2AwAAr4YYIP/PHEDX/wSw7ykA4AUAAMAIAACQDAAAIP0JABDjPwBA/g0A"
    "APz/DwBDgg8AILQLAPb/DABlfwIAoA0AAPQCAAC+AAAQ/k8AQJ/7A2Af+AIgrv8GALP4BQAA8QUAM/sBAP1OAIDP/wfQ70YBwAoA"
    "ADCvAAAA9gkAAEAvABBkXwBw/woAADBuAADjGgAQrQAAkB5wBbCP+Qpw//8CAAC8AAAwLwAA++8AEP/9AQD+bwAA+AcAAPgHAADt"
    "DQAAvw8AAPwKAAD9/wIA3vsCANtvAAD1CgAA6g8AED5/AGALbwAQ/T8AAOINAAD+AwBgL1EAoA31AnCf/AsAxa8CAMAcAADwBQAA"
    "+a8AIJ+7AAB//AMA9/8HAACgCgAAsAoAK/YGAPm/AQDajgAAncUFQA1ACEAIQAiABNACgASpAEDMHQAQuwEAAP6dAQCs+QMA6d0B"
    "ANNvAAD1nAAAjW4AEL8fABD9BgAA+T0AIC5WAEAJ8AQQXfcGAHLnAwAA4QEAE5oAAPsZAAD9SQAAn/kBAJu9AAD1HgAA9woAAK4v"
    "AABPfwAA+z8AAMALAADMqQAgL7EBEA9QCCAOUAoALSANAJdwCwCw/QIAEN0AAPT/AICv5gCgBtgAAADaAAAAnQAAAH4AAAB/AADC"
    "rwAgr/YAIBfkAAAAqQAAADwAAIAOAAD/rwUAgbhvQP7/AsAr9AUgEMsAAPA/AABArwAAAOEKEAfjCED/vwAAIC8AAMAMAAD1AgAA"
    "qzAIUB/yBZB9/gJQ768AACBfAAD8/wcQ/kYBgC8AAJDPnAEQiPgKAADQDAAo9gUQ+48AALANAADxDAAA9AYAAPd/AAD47wsA+VNP"
    "APblLwCx/wQw/z8AMIrPAAAAjgAA2/8IEP9/AgD1BQAgvwAAMF8AAAD0PQBA7doAgI/YAADPvwAA9h0AAPsvAACMjwAA9V8AAN0B"
    "AHDf3ACAHf8EQN//CgC2kw0AAFAPEAeRHxD9/wYA4BwAAPSnACD/xQJwD7AFUAzABBAP4AIAafcAANGPAACwPwAA9V8AYP8/ALCr"
    "HwAAoA8AALANAACgLwAAcC8AAPYIAADYPwAAwooAAAC3AAAAqQAAAH0AAKGvOAD0//8A+c8CMF3kBQAA9wIAUL8AAAD4BwAA0AgA"
    "VPUEAPxfAAAgHgAA4AgAAPgBAABtUAswD6AJkE33A3D/3wAAI28AUP//CkBKRACgCgAAQN8XAACC7gIAAPEHMCP7AFD/HAAAwA0A"
    "APIMAAD0BgAA+ggAAPj/BQD4YB8A96Q/ALH/DADV7wAQjvUCAAHyAgAg+AMA8N8IAGAOAADQBwAA5wAAAPQ+AOLPugDQnK8AMO5P"
    "AAD5CAAA/B4AAMxPAAD0PwAA+AQAYCzeAJAW7gAgy/gCAACwCAAAcAkAAsEGAJh9AADwGwAA/ZoAIL/hAjAfgAdADYAJMB+gCQCK"
    "8wQAsd8BAAD1AQAA+wEAgP8DIP31AIAu8wAAAPQAAAD1AAAA9QEA9E8AALy3AAApxQAAALcAAABtAAAgHwAA8a8BAPW4CxD9jwCw"
    "TX0AcHEfAAD1nwAAY/gIABZwDUBf0goQ/L8BABA/AACgCwAA4QMAAMcwCQAuoAdgXesBsP+fABASHgAA9v8DAP5mATBeAACwjwQA"
    "EMqPAAAA9QAAUO0AAPQ+AADyBQAA9gIAANkAAADbvAIA/q4OAH0DbgDqhH8A4v8IANn/BCBc5AQAANUAADDNBQDQzggA0AYAAOQB"
    "AAB+AAAAht8BEP/7BACf+AIA+q8AAP0KAECvDAAgXw8AAPgKABDpCACAO7cBwAfzBDDN7gcAAGAHAACQCQAA8gEA2F4AAPkLABDf"
    "fwBwb/QDkA6wCoANcA1wDXAPMH/3BgD5rwAA5mcAEG79AVAM+QMQ770IAACACAAAcAgQLsEBANRfACD//wMQ30YAkD8AAJDfBwAw"
    "258AAAD3ASBb7AAw/18AAPifABD/iwAQrgAAcK8GACD8rwAAEPcAAFvdAAD7bwAA8AsAAPYKAAC7AAAA/FsAAP78CwDcAF8A9rRP"
    "ANDvCRD+7wEA2kYAML8DAFD/bwAAEPoAAAC7AADHXwAg/wUAAOItAAD73wAA3fEDANzwBhB/8QQQX/gBAN/fAADzLwAA0wYAAL6P"
    "AAAf/gEA29wFAIOBCgAAkAYASfMCAOR+AACnnwAA//0BANr6AgDxvwAA+F8AAI9+AAB/TwAA+Q4AAMMcADBtyQCQBfIAcEn8AQC5"
    "owIAALADACrRAADTTwAA8y0AAPrcAADd6QAA9r8AAPQeAADrXwAAqZ4AAPQvAAAgjwAA8T0AANkBABBvUAtwDvEIgJ//AxD7rwAA"
    "IF8AAPANAADwDwAA8A0AAPMLAADyDAAA8wwAAPEMAADAHwAAs/8CQK/0BHAG9QEAAMoAAJD/CgBgbwEA0AkAAPECAAD2bwBQXdcA"
    "EAG1AABQ7ggAUI8CAIAIAADhAwAAxwAAAPnPACCP+QAQCO0AANBfAACA/gUAAJAOAGmwDwD4/wYA+f8HML9EAWAfAACQnwQAAKaP"
    "AAAC6AAAfegAAPpPAADgCwAAwC8AAMAvAADwHwAA8B8AAPMPAAD0DgAA4U8AANEeABD7ygBg/9ADcF6ACWANgAtAD+EJAI78AwDz"
    "TwAA4h0AAP69AEC/0QNQP6AJYA2QCyAP8QgAy/8BANJfAAD6rwBAb/ECAArxAwAA9QAAALsAACBPAADSzwgA/Yt+APpuAACP9gMA"
    "WdAGAADgCAAA9AIAAL0AAJKvFgD83o8A9/8AIC/1AQAA2gAAML4CAPb/CADVBwAA8wEAAMoAAADmbwBg//gAcO7sAACtbwAA9AoA"
    "ANsvAABfTwAA+B8AAPo9AAD23AAAYPYAAADzAQAA5wAAAI0AAPTfWAD2mvwA+i4AMJ/oAFA/8gZQP8AKcA7AC3Af8wVAf7wBAPo+"
    "AAAQzwAAwN8AAPvfALC/3QAwB+wAAADbAAAA3wAAIN8AAPt/ACCv+wAAT/QDADP1AQAA2QAAEH8AAMJvFAD6/68A4B4AAPMOAAD6"
    "AgAA/zgAMP/oAgC/sAoA6fcKAMDvAQD4zwAAzuoAADOqAACAXwAAcG8AAATnACBf+gAA938AAPfvAADP+gEASq8AAJC/AQAA9wgA"
    "APAHAEj6AgD8bwAA/F8AMI3+AQAA/QBg//8NYLmfBQDgCwAA9wIAAK0AAAD1/wGgv/gFwBr6AQCAvwEAEPoKACBwDwDY9QwA9e8D"
    "APqvAUC/+wMQGfoBAFCvAAAA9woAAHAPIHzkHwD7/wQAEH0AAKAeAADzBQAAvTAIYC/gB4DP/QQwu88AAACfAADgHgAA9yoAAO4B"
    "AAD+TgAQ//gCAL7QCQDp9gcA4O8AAOAeAAD2DAAA/AIAAP+fABD/6AkAzsANAOb3CgDR3wEAwB4AAPUMAAD6AQAA/ikAEP//AgB/"
    "wQoA6vQMALD/BQBALgAA8QcAAOggCBBfoAtgHvYFwP/vAjDcPwAAYAoAAMBeAAC29AAAmPgDAOPdBAAAoAcAAHAIAG1xCQCh/gIA"
    "8S8AAMB/AADgXwAA0C8AAPINAAD2DQAA9gsAAOF/AAD3rwAA3kcAUG8AAOCPFgBAzN8CAADxBgBl9gQA978BAME8AADZ5QAAP6AC"
    "ME+QBEANkAIwDfEAAG2YAADiLAAA+DYAIF3qAEAe+QAA3NgAADCwAgAAwAIAFOABAPavAACU3QAQ/SYAAHkAAAA9BAAg/48AIDug"
    "BABS9AEAw44AEP0JAICPXwCwCYwAAACLAAAgPwAAYB8AAPf/GhDvihsA8i4AEPyvAEDPzAAQv28AAPYNAADpjgAAyvYAANLPAAD3"
    "PgAA6fsAAFHwBQAA8AUAAPMEABDsAQDF/x4A+K49ANUbADC/yABQD9ADUA1gB3AKgAdADeEFEF+sAAD3GgAA9C0AQP+3AIDu4AJw"
    "yYQHYAtwCSAfoAgAi/QEAOKvAAAwjwAAsJ8AMPyPANCfjwAQAo8AACBPAAAgbwAAEJ8AEPz/AHB9+AAAAegAAPf/CzDPTwIAwQcA"
    "APICAACdAAAAgA0AAOAGAADGAAAA2CgAAP3tBACLMg0At8ULALFMAAD9nwAgf/cAAASrAADRPgAAcL8BABDSCgCYwQsA+/8BAPcM"
    "ABB/PQAAL2oAAARcAAAAHwAAUA0AAPaOFwDWzM8A4S4AAOE/AACgLwAAsF8AAPBfAADwXwAAoM8BAOC/ABD4DwBAXQ8AAAAPAABx"
    "bgIA/N4IAPgEAAD1AAAAjgAAAHAOAADhCAEA6JALEG/hCoAP+AGgn/8AUO9vAACALwAA8AYAAPMGAAD5AAAA/JwBAP/eDAD+B28A"
    "6XSPANH/HAD6rwCAf+YAEAOPAADAHQAAcE8AAADIAAAGrAAA/T8AAOIOAADxLwAA4D8AAKBfAADAHgAA0A0AAPELAADyDAAQ/C4A"
    "cE99AAACfAAAYI8AAPD9CQAQgA8ASMEKEP3fAQD4LQAgj+sBMB/8BQD83wkAQJIOAFSADRC/0QcA+P8BAPIKAADzHwAA9Q4AAPMN"
    "AADxDwAA8Q8AAPIvAADwvwAA098BMN/6AkAK9AEAMOsCAPn/CADJDwAAwQsAAPMIAACgCwAA4A4AAPQDAAD2KgAA/LwFAHsjDgDW"
    "QA0AkP8FAMZ9AACvzwAAfZ8AAPENAADyDQAAeioAAE09AAD3CQAAAKwAALA/AAD0BAAArIAKYB/xCHCP+gdA/98AAACcAAD1rwAg"
    "7+4AIE6uAACAjwAAAPgGAADADQC3+AsA+K8BAPIMAAD1HwAA8g8AAPYOAAD4CQAA9w4AAPgLAADyDQAAYG8AAPMJABDdIQFwX+EK"
    "wI/8AiD8vwAAgE8AAIAPAAD0HAAg/4sAMN/hAkAP0ARAD9AIEB/gBQCK9wEA0o8AAPdPAADTJAAAmQAAAH4AAAD9LQAAQIsAABBt"
    "AAD2DgAA+X8A0J/8AFAE3QAAsF8AALCvAwAAxA0AF8EOAPnvBQDwAgAA8AQAAJYAAAD8nwEAvoAJAOsjDgC45AcAwW4AAMafAVBO"
    "9QOQOP0EMP+nCAAQwAgAALACAEfVAADlTwAA8x4AAPsGAACfAQAw788CQO+9DgBfcz8Ay/gKAOLPAADyDQAA9A8AAPQMAAD3CgAA"
    "9QkAAPcHAADzCQAAwQ8AAPhPAKC/zQDAB40AAHHPBVD/7wkg+AoAAPcCAADaAAAA+78AAPonABCfAAAA/QgAAEBPAAAAjgAAg08A"
    "AP4JAAAQywAAkB0AAPgDACBvUQLAjf0J8N/7BjAE6wAAEM8AADCeAADQGwAA6QAAQE9AAsB8/grQ7/sEIALbAAAwnwAA0/8FQN/6"
    "BhAY9AQAYfsKAP3fAwB6TwAAsA0AAPQIAADnGwBgb6cAsAfCAFAEwQAAAJMAAAA7AACQLQMA9/9vAPh+AAD8/gAA8+4BALAfAADl"
    "TgAAbIgAEC95AAD5GwAA+wsAML9vABA6qgAAAKkAAACcAABQXwAQ/d8IALvYfwD5HQCAj4sAsAqoABAFuwAAAJ0AAEAvAADkfxQA"
    "+P/PAPn/BAD4RQAQnwAAkI83ADDM/gUAALEMACGxCgD5/wQA0o8AAH3XABAH1wIAof8NANYvAABRCwAAwAQAAOIAABC4zQBQCfQB"
    "cAX1BRC9bQgAQ0EIAABwBSAY4gAA2DsAAP7/AnBfAQDgfQMAQNyfAAAA9gAAAOkAAOU/ABC/BAAAIF4AALELAADnAQBQP2QC4O//"
    "CpB8+AQAAM0AADBvAADyPwAw/NoAMO/rAAD3nwAA9Q0AAP0LAAD9DwAA8goAAPRPAGD/7ACwa84AMN4eAAD8BQAQ3wkAAK0PAADz"
    "DwAAUD8AAPIEAADIIAwwH7AKkA3zBdD/zwBQ7E8AAGAvAACxnAUAbvEKIEx8ChDNQwgAAEAIAENwBgB8swAA0z8AAPItAAD4zwAA"
    "6fEFAN6wCTC/wAkgP/IGEL3vAAD0XwAAmq4AIP/kAgBdyQAA9C4AAMsKAAAfDAAwLA0AAPkHAADkTwAAjMkAIAvAA0AHUAhgBEAI"
    "QAlgCACe9gIA9F8AADD/AQD37wBA/98AACjfAAAA/wAAAM8AABD/AgAw3wEQ+gMAUO8IAKCLDAAQgQwAAMAIAADyFQIA+u4MAP7f"
    "BwD4CAAAbx8AQAosAABwPwAAUP0DAACwBgCc+QIA+H8AAPMAAACqAAAQP10AgB1/BuCd/wqw/54DEPQIAADyBgAQzPwGEF5FAQAM"
    "AACA/48AEETFBwAAsAQgJ8oAIP8YAADRBAAA3AEAEC8AAFCPJABQ7/8DMB2QCQDLtAsA0t8BALD/CgDK+QkAjcAFAAbEAADy/wkA"
    "1p8BAJAJAADhBAAAxF0AMI/6AjAu8gMA+n8AAHD9AwCywQUAl+ECAPR/AADFzQBwXfgAQE79AwDGmAQAAIAIAABgCAAx0gYA9o8B"
    "AKNPABD/rwBgKuMBgAagBEAIUAgAD5AIAOz6AwDkXQAAAPkAAKH/AVD//gAQCPoAAAD7AAAA+gAAAPwDAAD4AzD/AQCg/wYA0NoI"
    "ABCzCgAA8AgAAPRaBxD9/w8g/osDAPwfAFCvjwAQN24AAMB/AAAw/QYABPALIK/7BwD6rwEAoAwAAPQBAACtIQBQL58BsG3/CdD/"
    "rwIg1wsAANALAACryAEA36wAUC4AAHD/jQAARPgHAACQCABJ9wUA/n4AANIAAADMAAAgLwAAQI4nAIDP/QIgH3ALAI3VCQDSvwEA"
    "kf8fAPjqDQBu4AYAJvYDAMD/CgBgjwAAcA0AAOAGAADDvwIA29cIcB/1AxD8XwAA0P8CANKgBQC0tAYA0s8AAPvPADB//gEA7/8G"
    "AKL5CQAAkAoAAMAIALb2BQD5zwAAks4AAPz6AUA+YgZQBzAIQAcQCDAcUAgAyucDAMGPAAAA+wEAYP8CMP3/AJDP7wAQA98AAADe"
    "AAAA/AUAAPgHQP8CALD/BwCQag4AAHAPAADQCgAA8ScCEPz/D0D/zwsQ/AUAQI8/AAATTgAA5B8AAKH+BAAAwAhASPoEIPxtAADA"
    "BwAA9hEAEI6KAGAPzQbgz/8JoP+PAQCgHwAAwAkAIKYcAOCtFQCgBgAAoM1cACBY5wgAAFAMACKhCgD17wEA5gEAAKwAADAfAABQ"
    "DiQAcP//BUBvkAsAjtUJANXPAQDh/x8A69gLAG/gAwAV1QEA0P8JAPKfAQCwCQAA8wIAAOFNADDP+wCAG9cAEO0fAADg7QIAwpAI"
    "ANPEBgCQ3gEA2F4AUE2bAEAd7AAA6MsEAABwCAAAQAgAIrAHAPjfAgDCBwAA728AYEriAYAIgAVwCEAIIA5QBgDJ5AMA0Z8AEPst"
    "AIBdngAwH8oAAPf+AwAA0AgAAMAIIEj1BxD/jwEAzswGII+IBFAMAACAz3sAEET5BwAAgAgQS+UHAPyPASC5/AZgn4gBQA0AAEDP"
    "WwAQRegFAACACBBG9QMw/48AAJAfAADaBAAgHwAAUEsEAED//wQAL6AIAMjUBwCRvwEAmMgIAOyKBRAuAABgz4wAEET3BwAAoAcQ"
    "TPkBAPk+AADyBQAA+28AMD73A3AIgAhQCEAIQAyACACe+AIA428AAMltAACP+AIAr/kFAMTLBQAAgAgAAJAHAEj3AgD6fwAAwUwB"
    "AN3tCGAPwAcg39wBAOCfAACm8gAAi/UAAMN/ABD+jgBQXJ4AIJ/NAACD+AIAALAGAASACEBO5QcQ/a8BALJdAACv/QcArqALAOTf"
    "AQCwzQEAqOIDAKrzAQDybwAAUC8AAOAqAADs9ABgT/kI4L//CXD/vwAAMG8AAGAvAAAA9wYAQP8EIPv/B6Df+gQQA/QFAAD3BwAA"
    "+QgAAPkGAPP/BQDK+gYgL/MBADLaAgDz/woAwH0BAPEGAADlAgAA0a8AAOjtABBf9QBwDLkAELL/BwD0nwEAoAsAAPEHAADYPABg"
    "f8kAAAC3AABAPwAAoJ8AAAD0BwAr8QcA+M8AAM7cABCPaABAjwQAIMzfAQAA0QgAALAHUE73AhD6XwAAAOMDABD+BRD5/wRAfPME"
    "AAD0BAAA9AQAAPYEAAD1BADDGAAA/v8BMC/BBGAJcAhwCFAIQAyQBgC/+QIAs38AANMZAADt3wAgHtIEQAhQCEAIQAhAClAIAL7q"
    "BQDEnQAw/wYAsM8PACAiTwAAAE8AAFAfAACwTwEQ+v8LQO+MAxD/AgBw3gkAkGkNABCADAAAgAwAALAGAAD3/wcA/8wDAID/bwDm"
    "hS8AR2AMAADABgCw/woAwI8AAGAPAADACQAAQO4BAOOsBDBNgAYwn/IBAKLfAAAA7AQAIJwDACDvAFD/AwCwvgsAgEsPAABADQAA"
    "gAwAANBZARD7/wpQ72gBAPsaABDvvwBwHvQDcA2gC5AMgAxQDnANEK/1CAD3/wAAEPgCANX/ALD//AAwGPgAAAD4AwAA+AQAAPcH"
    "AAD6CBD/AwCAzw4AgGgPAACADwAAwAwAAPGqBRD9/wswz1gBANABAADKAQAAPgAAQA5UAHBP5wcwDkAMAKqkDACR7wIg+i8AoJ9P"
    "AFBjLwAA8l8AAKH+AwAV0AoA3/oLAPvfAwDYGwBAX2wAAABKAABgTwAAUP0DAAFwDBCPxwwA5v8FANP/DQDr+AkAU+ICAAC5AQDy"
    "/wkA8o4CALAKAADyBAAQ+08AcI++AACgbwAA8G8AAAD4AhAF4AlAr/sGEP2vABD8nwAgXukAABC8AADAbwAAIPgFAAKwCUBO5AYA"
    "/78BAKAKAAD2AwAAbxUAcC8/BbBr/wrA/48BQNgMAADQCQAAwgEAANYAAABNAAAAHwAAUP+vASBvoQgAqpAJAML/AQD0AQAAqQAA"
    "EC8AAEAMAACAnmgBcH7FCCBPwQYA5b8AAPIIAAD4BQAgfwAAMH8VAHD//wNQz6QOAN6lDwDT/wcAYA4AAPQEABCddABwHa0G4I7/"
    "CnD/fwEAYA8AAKANABDaKQAgTKwAAF67AACC+AIAAMAFAABADAAUgAsA++8DABD5BwDU/wKA//0DMAf4AgAA+AUAAPgEAAD4CAAA"
    "/AcAh4YEANzMBQANAABQzykAMHj4AgAAYAgABtEEAPdfAAD3HwBQ348AkAv0BMAIsAuwCIAMgA3ACiCf/AMA+F0AQO8rAHAauwAQ"
    "Tf0CALOXBgAAUAgAAFAIMAzTBSD9jwAAy+0EAI1EAgALAABQbAMAUMy9AAAC0ABAC/MAAPlvACDfAQDQ7AcAgGYNAABQDwAAsAoA"
    "APIFAAD77Qww74gHAJLNAhDepwYAjXEHANPuAAAA/wEAkIUFANDUAgDQbwBA/wMAsL4LALAnHwAAMA8AAKAMAADzWAMA/P8PMP94"
    "BADaBQAw/68AgB/2BYALkAygCIAMgAuACzCv+AkA+a8BALIaAADa3gAADeAFMAmQBlAJUAhgDIAEAL7lAQDTXgAAAPYHELX/CLD/"
    "/QgwF/QIAAD1CAAA9QcAAPcJAAD4CADSnwAAzPcDED7wBABA+gYA0P8JAFAdAACwCQAA8QQAAOAEAADWAQAATwAAQH8kAIC/+QVQ"
    "HqAJAMvVBQDRnwAQ+U0AUExqAAAwLwAA8B0AACDpAgAAsAgAarQHAPifAVDfAQCQ7gQAkMcEAADQBAAA8gEAANcAABD//wtQ74oG"
    "ADDMAgD3/wBAn/4DIAD+AAAA/gAAAN8AAADvAQAw3wIA0u8BAMv3AwA58gMAALkAALLfAwD03wMA4AgAAPUEAABwDQAA4AYAAKpi"
    "ADA/2QKwbP4KsP+vAyCoHwAAkA0AANADAAD2AAAAfAAAAK8XAGDP/QYAT2AMAKyyCQDR/wMA/V8AUG/bAAAijQAA9C8AALP/BQAA"
    "8gsAQ/kGAP+vAAAA+QQAUP8CMPzvAKD//wAQBN8AAADfAAAA/AwAAPwGAPssAHBv2gAAAvMAADCcAACgzwAAA/MHMH/mCBD5zwEA"
    "1V4AIG/7ARBf+AQAxNkIAACACAAAsAcAd/UCAPV/AAAA9QMAMP8EMP3+ASBH+AAAAOgAAAD3AQAA+QYAAPgCANLfBAC5+QcgL/IC"
    "MAPYAgDR/woAsF0BALAGAADzAgAAwAoAAPQHAABPAAAQfwEAQO/fARAPoQsAnoEMAKL/BQDDnwAAnP0JMF+ADAD52gIAQM8AALD5"
    "AADxwgAA8m8AAKAGAAD0MgAAjecAcA/tBeDv/wnQ/28AAJEOAADgCgAAxT0AQJ/IACADtQAAMKsAAGD+AwAAcAsAapQLAPbvAgAA"
    "9QYAQP8EMPv6BEA78AQAAPEEAADzAwAA9QQAAPYEAOAIAADzAwAAnHkAYB++BtCO/weA/z8AALEOAADgDgAAxAUAAOx/ACAe8gBA"
    "CKAEcAhgCEALUAgAvtMFALK/AADJ3AcAX0UCQK8EACC7vwAAAKAFAABwB1BL5QEA+T0AAPhMAFBOewAAED4AAPIeAACAvQAAANAF"
    "ACzDBwD9jwAAoAgAAOYDAACLAAAwjwIAYP//AwAvgAwAy7UMAIH/AiDbKwBwTI0AYF3eAACzuQUAAIAIAAAwCwACkQoQ/+8CAHAP"
    "AAD2CAAAnQAAIF8UAFD/zwMQT4EMAOhVDwBg/wsAEPoIEPj/CaDf+wgQBPoEAAD8AAAA/AAAAPwDAAD6BwDT/wYA3fkKAJ/gBgAu"
    "9gAAUP8GAPCvAgDQCwAA9AcAAJnMAACuOAAAbQMAAP3PAgAAUAkAACAMABWyCAD6vwEAkAoAAPMEAACMcgBAP90D4I3/CuD/nwEg"
    "lB8AAJAvAADyBQAA+RAAAJ6ZAIBP3wzQ//8HMNgsAADgCgAA8wcAAMH/DAD3ywkAduAEAAD2AwCg/wkAgF8AAIAKAADwBQAw/wgA"
    "4K0vAFAjLwAAMC8AAJAMAADxCAIA+P4PIP/PCQCh/wUAzJkKQB9wB0DeuAAAYe8BAIDrBQDA+AIAoF8AEP1fAEB/zgAwLKsAAACO"
    "AAAwTwAAsQ0AAPn+BxD/zwUg3wIAcN8PALBbTwAQcR8AAMALAAD0iAIA/P8LIN9GAQDvnwAArGcEEC4AAFDPSgBAi/sFAADQB0Cv"
    "6wEQ+k8AANL/BwD8/AoAn+AGAAP0AQCg/gYA878CAJAOAADyBgAAikgAgM/uAJAL+gQQycoIAACACAAAoAcAa/QEAP1/ABDt7wNA"
    "jjcAYAsAAFD/WwAgd/oAAADzAABXvQAA/xoAANAJAAD0AwAAm0YAUD+NAeCf/wnA/78DAMQOAADACgAAgb8DAMvpCyAO0AZwj5wA"
    "ANaPAADQ+QQA8OgDALCPAACyzgMA7vkIUAz1AjC/PwAA4U8AAPD1AADxugAA8C0AAHAvAADwCwAA61YAQH/eAqDf/wqA768BAJAf"
    "AACQHwAA9r8AEI/4BgD4/gsAQaMIAACQBwAA4QEAdJsAAPkaAADFGQAA7t0AMBzRBHAIYAiACFAIUAqwBBCf2wAA9ywAAJLPBQC8"
    "ywsQH4ALMM/6AgCxnwAAsM8AAMCPAACgLQAA2a8BEF/3BQB/+gYAcqcIAACACAAAsAUAbsoAAPkcAAChKwAAzPgEYAvBB0B/zwAA"
    "9T8AAODnAADEpwAA8T8AAPQvAAD73QAQj/ECcG+wCHBPsAhAH/EHAM3+AQDjbwAA4AoAAPM/AAD3fwAA/F8AAPRvAADQDwAA4AwA"
    "AKAKAADVBwAAzC4AAAxsAAAWPwAAYAsAAOUDAAD7KDYAhPocAPSfAACR+gEAUP8BAKBfAAAgbwAAAKoAAIvsAQDV/wAA8QYAAPgC"
    "AAC/cASAr/YJYP//BAC13wAAwD8AAPALAADrrwBgj0YAUCwAAMD/AQAwuwYAAMAKAAD1CQAA/QMAAAAdAABwPwAA8CsAAPTvAQD1"
    "iAoA+QQPAJLbDgAA+gow/Q0AkI1fAQDo/wUA+C8AAPIHAAD3BAAAnwAAID8AAACBHQAA9p8AEP+vAGDvBgAwZwYAECoLAAC0LQAA"
    "UFwAABDpBwDliQog/tsDMP//BQB2sQcAANEDAACGAAAACgAA8hwAAPu9ACCf4AJAz7AFQG/ABwAf8QkAmvoCANKPAADxHgAg/T8A"
    "UP9PAED/HwAA9w0AAPULAAD0CgAA8gsAAKIsAAD7rQAAefIAACPzAAAAqgAAcn8AAPn/PwDTiQQAs/0DQO/7CCAF/gEAAL8AAACr"
    "AAAAyAAAuI8AAMI+AADBBwAA6AEAAH8wBVAP9ARQ//8CAMuPAABQPwAA0AoAANTvACD+TADQXwAAsK8BAFD/BQAA8gkAAPUJAAD0"
    "BQAAYAkAAPIIAAD0BQAAyccCAPnfBgDt0gYA/v0EAKGvAABw/wsA9v8PAPv/CQCS6woAAKAGAAC0AQAgLgAAsAMAAPUeAADungAQ"
    "b8EBMB+gBFBfsAIgL/MAANvOAADzXwAA8h4AAPtPAED/HwBw/w4AkP8LABD9CQAA9QUAAOIJAADCCgAA654AMB+aACAHigAAIC8A"
    "AKBvAAD37U8A9ABFAPp/AGBv+gKAVs8AANAvAABQTwAAAPoAABD7AQD7jwEA8wMAAP4BAIBvgAXADvUIwO/fABDrXwAA9AoAAPQF"
    "AAD67wBA74oA0I8BAMD/LQAwmF8AADBvAADFLwAA/AUAABAdAADhDwAA8wYAAMYAAADpOgAA+P8BAPj/BQAguwEA+i4AAN2+AACE"
    "/wQA+t8DAMEeAADyCAAAzQEAAH0AAADF/wAwj/kAQO9/AFD/BQCAbwAAQOgAADD6AQAA9gIAAHD8/wD5Sq8A/u0cAPT/DAAA8AoA"
    "APcAABB/AADABgAAoAkAAPNdAADd0QAAf/AAAL/zAAB+zwAA2W8AANAKAABA+y8Q+u0uUP//DgCJ+AkAAPECAACqAAAQbwAAMC8A"
    "APf/AZD/WgDg/w8AsN4vAABgHwAAwAwAAPYHAADaAACA/f8IkP+9BWDPAAAQ7gAAAPgCAAD4AAAwvgAAkG8AAADABQAA8gcAAPcI"
    "AAD/SAAA//8DEN+0CwDr+QsA4f8GAPXeAgD8eQFQjwAAkP8HAGDsBwAAsAYAAPIDAADnAAAA4j0AAN25AAB/wAAwX6AFUB+ABTAf"
    "oAUAj+UDAPSfAQBA/AsAz1AJQF/2AzD/HgAAoy8AAAAuAAAADAAAQAwAAJCvAADx9QMATfAFAL/+AoD/XQAw/wEAAPkKAACgDwAA"
    "5v8BkM/5A8C/3gBw/w4AAIJfAABgTwAA0gwAAPkBAACATwAA87oAAMbbAAD6nwAQz1sAIA2SAABowgAAkZ4AANEIAAD3AwAAnnAH"
    "MD/yCZCP/ABg/38AAMMfAADQCQAA0AkAAOAfAADQDwAAsA8AAKAvAADgHwAA8B8AAMAPAAD4rwAAp/oAAADXAABAzgEw/88EEPoH"
    "AACYAAAAHQAAIPoMAMDOXwAgQH8BAPT/ChD/XAIAzwEAEE4AAAA/AAAg/88AEFn8AgBg7wIA8R8AAMAfAABgbwAAwF8AEP8dAED/"
    "/wOw74gBwD4AAIBPAAAgnwAAAMoAABC+AABQPwAAANAOAADQPwAA8j8AAPQOAADzCwAA+AoAAPYHAACxCQAA8BwAAPZ+AAD+sQAA"
    "/+ABEK/gAgDf8wMA+f8AANCPAADZGwAARukBAFGwBADtcAUwHqAEMA7yASCNvAAA6BoAAPVfAADY+QAAQPAFAADABgAA8AQAq/oA"
    "AP//TQD3rTgw/AkA0I8vALAGTAAQAD8AAEAfAADACwAA+0oWIP//PyD/BQAAtAkAANAnARD4/gqg/xcAAI4AABA/AAAgHwAAAPdv"
    "AED/+wBwr/oBMPtvABD/CgBQXw4AED0eAAD1LwAA8S0AAICuAAAA9QEAAPIFAAD4AQCj3QAA+M8EANHvfwDAGwAA860AAJjBACCf"
    "oAVAj3AIED+gBwDY+QYAod8BAPALAAD2LwAA+h8AIP8/AHD/DgAA8woAAPAHAADgBAAg/QwAkK8/AFBXPwAAoA4AAPUHAAD+MRcw"
    "z/obAP19AQCABwAA8gYAAPUCAAD7nAAA+50IAPuCCQDzxQoAYO8CAPuvAICP/wBQpo8AAPQbAADyCQAAkC8AAIBfAAD9DwAg654A"
    "MHr6AwBAzQAA0C8AAPAJAACQDwAA0QkAEN8BACD9LwDwfl8AoCFPAACx/wgA/40CAOoAAACrAAAAPwAAAPmvAACZ+QAAAOYAACB/"
    "AADhTwAA9Y8AAGBPAAD7DAAA+N8AALr5AgBAzwAA8h8AAPILAABAPwAwLE4AAPlfAAD1AQAAzAAAII9gBZBv/Alw//8BAKNvAADh"
    "CgAA9QIAALAIAAD1BwAA6gAAAJwxAADu/wcA+s8MAPbtDACQ/wMAYAwAANANAAD3AgAAyiAAAO3vAAD73gYA1fkFAGDPAQCQCwAA"
    "8QsAAPYBAAC7dgEA7f8IANxVDQDm+AwAoM8CAOoAABB/cQAAf/wCAPpPAACQDgAA4AoAAPUCAADLAAAAINkGAPuYCjCv1AUQ//8H"
    "AADhAQAAawAAEA0AAFAEAADgBwAA8B8AAPIfAAD2DwAA+Q0AAPgfAAD0bwAA0AwAAPz/A0D/JgHgTwAAkP8FAAD3CAAAwAsAAPUH"
    "AAD+AAAAkBgAAPWPAED/8QBgz8ABUL+wBhCP9AYA9f8AAHCeAADRGgAAbKcAAKr7AADh/wUAAKAKAABQCwBC5AsAsv8FAPU/AAD5"
    "BwAA/AIAEP9PAADZnwAAAM4AAMWPAADzHwAA9hwAAPWtAABQ9QAAAPgAAADdAABgnxQA8/+vAPWbJgCgfwAA8uQCAND4AACg7wEA"
    "+H8AEG/IABBdnAAAsW8AAPRvAADP+ABwT7AFoA+ACaAOgAtgT7AJEH/4BQDjrwEAwAkAAPIPAADzHwAA9A0AAPMLAAD1CgAA8goA"
    "ALANAADnXwAAz88AAAOeAADF/wqA/20AMPkGAADKAQAAXAAAAIAHAAD0CwAA+QEAAOvbAgD97goA+lENAPboDABQ/gQQ+88AgN//"
    "AxB17wAAsE8AACCfAAAA2wAAc+8AAP5vACD9BwDA7Q0AIIAMAACwCQAA0AUAAPgCAAD/nwIQ7/0JALAJAACwDgAAsA0AAPANAADQ"
    "DQAA0AkAAKAKAACQCwAQ+wsAoL4PAOBlDwAwsT4BIP3/CSD+RQIAuwAAAD8AAADVAAAAnNQAAF/bAADffwAA5A8AAOAIAADyBAAA"
    "9gEAAIAKAADzBQAA1wAAAOcVAAD2/wMA9tcIAPL3BwBwzwAA9l8AANLeAAAg7gEAMK8AAACuAAAA6gAAePwAAPbPAQDABwAA4A8A"
    "AOAfAADwLwAA0B8AAOAfAADgHwAAYC8AAPZPAGD/7wBw798AAHNvAAAgnwAAAP4AAKfvAAD3TwAAgOoDEN3JCGCP+ARQ/58AAIXO"
    "AAAwXwAA8AgAAMECAADwCwAA8i8AAPNvAADzLwAA8i8AAPQPAADxHwAAwC8AQP9PALDv/wAwA+8CAPn/CAD/GwAA2wEAQF8AAEAP"
    "AAAAkAgAAPECAADmAAAAuTAAAI3dCgD8CB0A9pUNAIDvBACQnwAA+MUCAP/TAwD73wBArw8AMAx4AACMugAAkE0AAOAFAAD1BQAA"
    "zRADQF/xC6BP/QOA/68AIMsfAADwCQAA968AAJ76AQBS7wAAsF8AACCPAAAA2gAAm/8BAPjPAADgCQAA4A0AALAvAADgXwAA0E8A"
    "APBPAADxDwAA4AwAAPAFAAD0BwAQ/ZACUL/1CXDv/wcQ+68AANA/AADxCwAAoD0AAPjOADDf4AFQb+AFYA/wBCAd9QQA+u8BALJt"
    "AADHbwDg/wYA8N8AAKDvCAAAgg0AAKAPAADUDwAA9wcAAPhvAADd3QAAYp8AADAvAAAAqgAAAPUAAEf7AQD3jwAAUB0AAPEMAAD0"
    "BQAA6wMAAPtPAAC71QAA1vcAAFCeAAD3TwAA+88AAPXvAAAw+AUAAKAKAACwCwAB9QkA9v8CANEvAAD4HAAA/gIAAO8ZABD/rwAA"
    "/f0AAPjuAQCxjwAAwAoAAOAvAADQDwAAsD8AAKA/AACwLwAA4C8AALAOAADzXwAA9+8AABD3BCCW/gWQ/88BAPlPAAD2CwAA8gQA"
    "AN/dAAD/OwAA3AAAAPUDAACwCgAAoA4AAPkKAAD7AQAA0AgAAPIBAACrgAJAX/sIcP//AyCdzwAAcG8AANAfAAD0AQAA3BABMI/1"
    "BpBv/gKw/58AAPovAADzCQAA9QMAAOUuACD/fwAAR88AAJH/CDD/rwJA/wsAAPkFAADZAAAA9wUAAP8LAADaHwAA0A8AAOANAAD8"
    "RhgA/v9PAPd/AwD4zwAA3/oDABzyBAAA9gAAEK8AAJAvABD7jBgA+/8cAJOeAFDvBQDAOwAA0M8BAEDbCAAAcAsAAMEMAADyBwBw"
    "7I8AgO+/ACArbwAAkI8FgP3PBXDPAwBATwAAkAwAAAD3jwAAzusAAPvPAAD1TwAAMOwAEAr3ABBuzQAA978AAOPvADD8GADwzwAA"
    "oP8IAAC3HwAAcB8AAPgvAAD0CQAAewAAUD/iA5AP/ABg/18AAPYLAADxBAAAyQAAAK0AAACwCAAA9gIAAI1AB1Av0gmgz+8BYJ9f"
    "AABgHgAA4AcAAPfPAMC/3wDw/14AgM8AAADCCQAAkA0AAPIIAADKAQAA0Y8AAOv4ACA/0AJQD6AFMAqgBTAN8QMArLsAAMFLAACi"
    "GwAA5cMAANbzAAD4nwAgvwkAIC4KAABnDQAA8QYAAKHNBQDdRAwwf8QGIP9fAACRDwAAIA8AALAGAADwAAAAka8BAMLIBACwsQMA"
    "gPgEIP9/ACBfCwAATgwAAOMJAADIHAAw/54AYJ/DAnAJkAdwCHAIUApwCQDe+gYA1UsAAOTvASD+jwBA/z4AQP8KAADcDAAQ/j8A"
    "APrPAACS/wgQ/AUAsP8NAHBWLgAAADwAAEANAADRBQAA+ooEAP3PBxDGXwBw7n8AAOIKAAD7AgAAss8AAADkBwBC5QcA9o4AAACo"
    "AAAAbQAAUA0AAOKjChD++gbgzv8CMADoAAAApQAA+f8CQF8TAEAOAABQnv4CUJ34CAAA0AUAUOsAAMsXAADRAgAA6QIAMH8AADB/"
    "AABQ/xgAML/eAgD6+g8Aoc4HAPf/BQDJ/wcAAPkBAMf/CBD/3wUA4AoAAPUCAADoAQAQqxgBML/DBgD0zwAAsF8AANXMAAB98QQQ"
    "T+cAEO4YABDYXwCAfu8AoBz6AiDs/wQAQPQIAACQCQB5oQwA1v8GAPQIAADvXwCAX+MAUAugBVAJgAgADqAIAN79AQDifgAAgJwC"
    "APX/BAD5vwAw/18AQP9PABD/PwAA+J8AAJBsAAD4CAAA+j8AAEJOAACADgAA9QgAIO9nA1D//wMA2igAENjfABDN/wAAUI8AAPUF"
    "AAD2GwAA0r8AACD+BAD9fwAAYAwAAPIFAACMIAZAD9EIYC/mAYD/bwAQhR8AADALAADo/wAA3ogAIG8AAGDf3wAw//wHABTiBgBh"
    "vwAA+xgAAPIGAAD7BAAwfwAAQG8UAGD//gMgnrAJAOr4BQDTjwAA9P8DAMf9CAAA8QUQRPcBoP//CVDbrwIAsA0AANUDACDsAwBw"
    "H0ABAP3/AQD3HgAA7w8AIB9/AFBvfwAQ7wkAAOg8AGBv7gBgDegAIO7+AwBC9gUAAPAFAAD1AwD3jwAAxwEAAP9PACCfugBgDMAD"
    "gAxgCGANkAgQ3/8DAPY5AADGCwAA/A8AAP0uABD/KwAA+QoAAPleAAD67wAAtIwAANoYAAD/jwAAFpsAAACNAABQTwAA+AoAgP//"
    "BCC6JwBA/X8AgPzfAAD5PwAA/wYAALopAABx3wIAQ/cKIPuLAgAgLgAA4AgAAJpABEAe8QhAX/sCYP+/AAAEbAAAEB0AAKOPAADs"
    "GAAQPwAAIJ/7A0Dv+QcQBPADADCMAACiCAAAwQYAAPwAAECvAABwrwEAgP9/AGCf+QMA+P0LAKHvBADl/wMA9/8FAAD4AADp/w0g"
    "/38BAOEKAADzBQAA1wAAAN8wAwD/+AUA+H8AAPcfAADMrwAwD/oBIF/3AxD8fwAA1E0AAK+KAAB+tgAA9v8CAACwBQAAcAkQRMYK"
    "ELbPAQDHLQAA3tgAMB+wAkAOUAhQCFAIQA/iByCv/gEA5k4AAOU7ABCPrQAQn/kCAPr/AwAA8QQAAPAEAFf5AADGnQAA/1wAEP97"
    "AECfAACA73wAcO/6AwAB+gQAoa8AAP0FAACU/AgA/4gCQL8UAID/7wAAm/gAAAD3AACAzwAA0xkAAOQFAADtAAAgrwAAQH8AAGD/"
    "TwBAn/QCEN/2CwDU/wUAt40BEJ9oAKAPAACA/58AAFbaAAAQ/gAA5k4AEOoCAADkOwAA+uwBEM7QA1BvgAaAD5AIcD/3BTDf/wIA"
    "9CwAAPyOAHCv/gBAv/4EAOX/CAAA8AgAAPQGIJz/ARD5PgAA5wsAEN8iATCf1AQA9+8AAPufAACf+gAQL/UEAPf/AwD5bgBgX/oA"
    "IH/6AwCE/AQAAPAHAADxCAAD+AEA+k0AEO8CAGAOMAIgP9IDAOufAAD3CwAA3w4AIE8/ABD/HAAAUAwSAOEUjgCKkB8QH/IIUG/7"
    "AlD/rwAAAS8AAFALAADjnwAA+t8AIP1PAAD8TwAg/U8AAPxPAAD2/wYAov8CAMP/DwCpxw4AAPIGAADbABCZvwHQ//8EAPEHAAD2"
    "AgAAsf8IALX5CwAA8gYAlvwJEP/vAwBTfwAAgA4AAPEFAADo/x8AZsUcACDLAwDlCQAA+QkAALF/AAByfwAA2QUAAMj/BQC6MgAA"
    "XQAAIK+8ARDf6AcAAdADAGGsAACqBwAAcToAAPjPAAD4zwAA+l8AAPcfAAD+HwAA/B8AAJGcAADKHgAA/88AUI/zAIANgAeADGAI"
    "gA3ECHD/3wAA6xgAAMVhAADL8AIAX8AEMA+ABHAMQAcgH8EFAL/8AwDEPAAAnQAAgP8AAJDZAgAAsAMAANEAAADUAAAQ/cgLAPzP"
    "AlD/BgCw/wsAYLoOAABwDwAAsAsAAPMGAAD9zwtg/98DAOePAADu7wAAAMoAAESeAnD//wdg/BsAAPIDAADWAAAA5lkCcG/CCFAv"
    "+AEQ7E8AAPELAACkPwAAKY0AAOU7AEC/AQCA/wQAINYIAACABQAAsAQAAPUAACD9zQZQ/88DANkIAAD9zwAgf/YDgA6AA1AOgAgg"
    "3+sEMP9vAADmCAAAtVwAAGwyAAD5TwAA/E8AAPxPAAD8TwAA/I8AAMZ7ACCvAABw/wMAMMoIAABwCgAAoAwAAPjPBSD//y8g78wH"
    "ANEJAAD4BAAAvwAAIK8CAHD/rwFAb+IHAPv8CADibwAA1a8BcP//BwAl6wUAoG8AAPktAAC07wAAIv0BAOWfAAC23wUg//8MAAD1"
    "BACgXwAA+QMAAP0dAABQ7wAA5WsAAOKPAADEvwAAAM8AADCfACClzwLw/+8DQOQMAADyBwAAxB0AAPRfAAD5CgCA/0sAAIT/BwAA"
    "4g4AQP8LAPWOABD5zwEAh/oJAAD5BADVPQAA/QgAALCPAABT/gAA+ksAACAOAADACQAAyABdAI2QDkD//ARAzM8AABBPAABACgAA"
    "9AYAAPcFAADMAQAAjwAAQL8CAFD/3wEg7/8FAPV+AAD1BQAA7AEAAK8AADCfAQBw/58AEK/4BgDslQ0A9M8DAOMBAADMAAAwbwAA"
    "UC8AAGAvJQBAL/wCEN7SCwCz3wQAEC8AAGAOAACwCQYA9rEPUO/6CPH//wMwV70AAAA/AAD6GQBwn74AgB7nAiDu/gMAQvQEAAPQ"
    "CSCP6AgA+K0AAPscAAD3fwAA/P8BAP3fAgD+TwAg/w4AAP4OAAD4HQAAx58AQG83AEAvOABw//0DUBvxCAAA9wAAoG8AALoEAAC6"
    "BwBA/68AQG/1AoAMUAiAClAIYB3lBQDevwEAxwgAAPgLACCPfwAwHd4AAPr/AwAg9QQAAMAGAGX1BAD2zwEAo88AAM0gAEAvAAAA"
    "7+8CYM/1BRAc4AcAMN0BANEaAED/CACA/z8AEBBfAAAAawAAMC8AAPTvBmD/vwNwvgAAAMcKADD/nwEA+L8BAPoPADDvTwBADfcA"
    "QC7yAAC2WgAg+y0AsM9/AHAGjgAAEG8AAKAKAAD3NAMw//8LIM0JAADnSAAAj+8BQE+ABIAOQASAD0AFMB+wBAD/zwAA1gcAAPkG"
    "ACD/fwBAXtsAcAzABIALcAVAHaEGIP/vAQD4SwAAxHwAAP9fAAD//wBA/88AQP/PADD/nwAA/I8AEMdbAAD2HgAA/S8AAIMvACDG"
    "fwLQ//8JoP0XAADmAAAAigAAANAMAAD2BAAgrwAAUK8AAID/BgAw760CAPz9DACh7wQA9/8IAPz/CwAw/gIA4RwAAPFfAAAw/AAA"
    "QOwBAPpKAAD7CgBg/28AACDLAAAAiQAAQC8AEPk5AAD//wcA2kgBAKR8AAD4/wAA+c8AAPefAADivwEA8P8AAPLPAACRCgAA8S8A"
    "AMNvAABATwAAg08AoP//CIDrXgEA8AYAAPECAAAAjQAAUD8AAOAqCRDboA/AX+cK8f//BEA06gAAAH8AAIA/AADxKwAA/QEAMO8A"
    "ADD/BQAw/+sHAPtmDwCgzggA+r8EEFr3CgAQ7gAAsA0AAFBfAAAQ6gAAIPcDALaPAAD0jwAA9v8BAPTPAADz/wAA+G8AEP1PADD/"
    "LwAAxiwAANNfAGCffwAAYK8AAOc/AAD57wMAMPIKAFT8DgDVjgIA94kCUO//BIAO9gQQ//8GAEDUCAAA0AgAnPsHAPd+AADBOgAA"
    "938AAPw/AAD+LwAQ/18AAP8vAAD7jwAAcawAAKH/AQD5/QEAALUAADDMBQD3rwQAsw0AALAFAADwAAAA0h0AAPwJAAC/AABAjwAA"
    "YJ8DADDv3AQArqAPAMLfBwDFTQAwr1IJAO/7AwD3HwAA808AAOjNAADMvQAA9ysAADB9AADhCwAAzCEDcE/xCqAO9wjw//8BQLu/"
    "AAAgTwAQ198AcP/vABD3GgAQ/wAAAPg+AAAQ/gMAUf0HAPhqAADIawAA+N8CIP7vAiD9jwBA/48AQP+vABD7jwAAtHwAACAfAACQ"
    "DAAA9AkAQM+QDJD//woQpv4EAADuAAAwfwAA9QoAAPhfAADuwQAAr3AEIH8gCSCPYAsQ7P4FAPSPAQDJbgAAbwAAIA8AAIDPnwEQ"
    "aMIHAACwBwAA+AIA7CkAIMqPAEBY/QAAcH8AAPYKAABQvwAAAPYDAAD6BSD+nAAAYGwAAPEeAAD6CAAQ/QAAMP9LAAD//wcA+f8M"
    "AGDLBQDliwBAL/8AgAz8ACD//wQAQPoCAAD0AjCN/gAA91wAANIKAADaAAAAbwAAMI8CAHD/vwBAL7QJEL3IDADB7wQAxmwAAPvf"
    "AAD8jwAA+M8AIP3PABD/rwAA/48AALJKAAD2PwAA+M8AAEC/AAD2/w0A+18BAOAHAAD0AQAAuwAAAPx/ADCvIgBAXwAAMM+cARD/"
    "/AkAAOMLAJP/BwDKTAAAIA4AAEAPAACwWgcA+9IHoI/4BoDM/QEAAKoAABA9AAAQjQAAkD8AAPIpASDe8Qawb/gD8f/fAHDcrwAA"
    "AH8AAKP/BAAA4QcAAPIEAET8BRD/nwQAsg0AAPEFAADDAAAw/gYAcO8PACAnPgAAEE4AAHAvAAD1TgFA//8GQN+8AQD6XgAg/wgA"
    "APlfAAD3PwAA7r0AUB/2AHCe/QEQ+28AENoCAKD/DACQiQ8AAGAvAACxDwAA9C0AAP7/DQDZqwkA3wEAAO4EAABBDAAAYAwAALAK"
    "AADxaAUA/f8OANpqAgCh3gEAyEYAAE4AAFDPzQAgu+gEAADwBAAA9gIAwE4AEPovABDcTwAAAI8AALffCID//wYg+gkAAPMEAAD6"
    "AgAA5G8AUP//AFD//wMAgv0FAAD4BgAA9AgAYf0GANSfAAD6HwAAzwUAIJ8EAED/7wIQSvEEAADyBwCH/gMA1koAABBsAACwLwAA"
    "+BYCQJ/xCdBv+gbA//8BEEfeAAAAngAA+AMBAO/lDAD4nwAA8x4AAPwvAAC/TwAw/28AAPoaAADFCAEA+9UGAPLPAQCgbwAA8X8A"
    "APi/AAD7nwAAxjwAADBPAAD0DAAA/EMDcF/zCNDf/wLA/98AAFSPAAAQTwAApG0AEO/8A0Bv8wQA/P8FAED0CAAA8AUAdfcEAOKf"
    "AAD2vQEA//wBMH/QBkAPoAiAD+AGUH/5BRD//wEA9m4AALEfAAD9KAEA//oFAPh/AAD5TwAA7/8AAP//AACSbQAAogcAAP7/AUB/"
    "8wdQr/cEAOX+BAAA8AIAdPcCAMXPAADqGAAg7xYAAP/4AAD1rwAA/M8AQG/0BoCv+AgQyM4BAAECAwQFBgcICQABAgMEBQYHCAkA"
    "AQIDBAUGBwgJAAkFBQYFAAkICQgEAQcHAwUBAAACAgcIAgABAgYDAwcDAwQGBgYECQEFAAkFAggCAAABBwYDAgEHBAYDAQMJAQcG"
    "CAQDAQQABQMGCQYBBwUEBAcCCAICBQcJBQQICAQJAAgJCAABAgMEBQYHCAkAAQIDBAUGBwgJAAECAwQFBgcICQAJBQUGBQAJCAkI"
    "BAEHBwMFAQAAAgIHCAIAAQIGAwMHAwMEBgYGBAkBBQAJBQIIAgAAAQcGAwIBBwMBAwkBBwYIBAMBBAAFAwYJBgEHBQQEBwIIAgIF"
    "BQQICAQJAAgJCAABAgMEBQYHCAkAAQIDBAUGBwgJAAECAwQFBgcICQAJBQUGBQAJCAkIBAEHBwMFAQAAAgIHCAIAAQIGAwMHAwME"
    "BgYGBAkBBQAJBQIIAgAAAQcGAwIBBwQGAwEDCQEHBggEAwEEAAUDBgkGAQcFBAQHAggCAgUHCQUECAgECQAICQMAAQIDBAUGBwgJ"
    "AAECAwQFBgcICQABAgMEBQYHCAkACQUFBgUACQgJCAQBBwcDBQEAAAICBwgCAAECBgMDBwMDBAYGBgQJAQUACQUCCAIAAAEHBgMC"
    "AQcEBgMBAwkBBwYIBAMBBAAFAwYJBgEHBQQEBwIIAgIFBwkFBAgIBAkACAkIAAECAwQFBgcICQABAgMEBQYHCAkAAQIDBAUGBwgJ"
    "AAkFBQYFAAkICQgEAQcHAwUBAAACAgcIAgABAgYDAwcDAwQGBgYECQEFAAkFAggCAAABBwYDAgEHBAYDAQMJAQcGCAQDAQQABQMG"
    "CQYBBwUEBAcCCAICBQcJBQQICAQJAAgJCAABAgMEBQYHCAkAAQIDBAUGBwgJAAECAwQFBgcICQAJBQUGBQAJCAkIBAEHBwMFAQAA"
    "AgIHCAIAAQIGAwMHAwMEBgYGBAkBBQAJBQIIAgAAAQcGAwIBBwQGAwEDCQEHBggEAwEEAAUDBgkGAQcFBAQHAggCAgUHCQUECAgE"
    "CQAICQgAAQIDBAUGBwgJAAECAwQFBgcICQABAgMEBQYHCAkACQUFBgUACQgJCAQBBwcDBQEAAAICBwgCAAECBgMDBwMDBAYGBgQJ"
    "AQUACQUCCAIAAAEHBgMCAQcEBgMBAwkBBwYIBAMBBAAFAwYJBgEHBQQEBwIIAgIFBwkFBAgIBAkACAkIAQIDBAUGBwgJAAECAwQF"
    "BgcICQABAgMEBQYHCAkACQUFBgUACQgJCAQBBwcDBQECBwgCAAECBgMDBwMDBAYGBgQJAQUACQUCCAIAAAEHBgMCAQQGAwEDCQEH"
    "BggEAwEEAAUDBgkGAQcFBAQHAggCAgUHCQUEBAkACAkIAAECAwQFBgcICQABAgMEBQYHCAkAAQIDBAUGBwgJAAkFBQYFAAkICQgE"
    "AQcHAwUBAAAHCAIAAQIGAwMHAwMEBgYGBAkBBQAJBQIIAgAAAQcGAwIBBwQGAwEDCQEHBggEAwEEAAUDBgkGAQcFBAQHAggCAgUH"
    "CQUECAgECQAICQgAAQIDBAUGBwgJAAECAwQFBgcICQABAgMEBQYHCAkACQUFBgUACQgJCAQBBwcDBQEAAAICBwgCAAECBgMDBwMD"
    "BAYGBgQJAQUACQUCCAIAAAEHBgMCAQcEBgMBAwkBBwYIBAMBBAAFAwYJBgEHBQQEBwIIAgIFBwkFBAgIBAkACAkIAAECAwQFBgcI"
    "CQABAgMEBQYHCAkAAQIDBAUGBwgJAAkFBQYFAAkICQgEAQcHAwUBAAACAgcIAgABAgYDAwcDAwQGBgYECQEFAAkFAggCAAABBwYD"
    "AgEHBAYDAQMJAQcGCAQDAQQABQMGCQYBBwUEBAcCCAICBQcJBQQICAQJAAgAAQIDBAUGBwgJAAECAwQFBgcICQABAgMEBQYHCAkA"
    "CQUFBgUACQgJCAQBBwcDBQEAAAICBwgCAAECBgMDBwMDBAYGBgQJAQUACQUCCAIAAAEHBgMCAQcEBgMBAwkBBwYIBAMBBAAFAwYJ"
    "BgEHBQQEBwIIAgIFBwkFBAgIBAkACAkIAAECAwQFBgcICQABAgMEBQYJAAECAwQFBgcICQAJBQUGBQAJCAkIBAEHBwMFAQAAAgIH"
    "CAIAAQIGAwMHAwMEBgYGBAkBBQAJBQIIAAEHBgMCAQcEBgMBAwkBBwYIBAMBBAAFAwYJBgEHBQQEBwICBQcJBQQECQAICQgAAQID"
    "BAUGBwgJAAECAwQFBgcICQABAgMEBQYHCAkACQUFBgUACQgJCAQBBwcDBQEAAAICBwgCAAECBgMDBwMDBAYGBgQJAQUACQUCCAIA"
    "AAEHBgMCAQcEBgMBAwkBBwYIBAMBBAAFAwYJBgEHBQQEBwIIAgIFBwkFBAgIBAkACAkI"
;

}  // namespace s5rf::detail
